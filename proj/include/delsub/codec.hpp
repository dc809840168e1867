#pragma once

#include <cstdint>
#include <vector>

#include "delsub/error_model.hpp"
#include "delsub/seq_core.hpp"

namespace delsub {

/// Bit layout of F_b for binary words of length n: one big-endian field per k in [0, 2s],
/// each ceil(log2(n_k + 1)) bits wide.
struct TagLayout {
  std::size_t n = 0;
  int s = 0;
  std::vector<std::uint64_t> moduli;
  std::vector<unsigned> widths;
  std::size_t bits = 0;
};

TagLayout tag_layout(std::size_t n, int s);

struct Tag {
  std::vector<std::uint64_t> values;  // F^k
  Sequence bits;                      // F_b
};

Tag compute_tag(const Sequence& x, int s);
/// Reads the fields of a tag bit string back into integers.
std::vector<std::uint64_t> parse_tag(const Sequence& bits, const TagLayout& layout);

Sequence repetition_encode(const Sequence& u, std::size_t fold);

struct CodecLayout {
  std::size_t n = 0;
  int s = 0;
  std::size_t n1 = 0;       // |F_b(x)|
  std::size_t msg_len = 0;  // |F_b(F_b(x))|
  std::size_t fold = 0;     // 2s + 2
  std::size_t n2 = 0;       // fold * msg_len
  std::size_t N = 0;        // n + n1 + n2
};

CodecLayout codec_layout(std::size_t n, int s);

/// (x, F_b(x), R_{2s+2}(F_b(F_b(x)))).
Sequence encode(const Sequence& x, int s);

/// The unique u of length msg_len whose repetition encoding reaches `segment` with at most one
/// deletion (exactly one when the segment is one symbol short) and at most s further operations
/// (substitutions, plus adjacent transpositions under DST). Throws DecodeFailure when no u or
/// more than one u qualifies.
Sequence repetition_decode(const Sequence& segment, std::size_t fold, std::size_t msg_len, int s,
                           ChannelModel model = ChannelModel::DS);

/// Brute-force decoder for the binary single-deletion code with residues a (length n, budget s).
/// |y| is n - 1 (one deletion) or n (operations only). Throws DecodeFailure when no codeword
/// qualifies and InvariantViolation when two distinct codewords do.
Sequence syndrome_decode(const Sequence& y, std::size_t n, int s, const std::vector<std::uint64_t>& residues,
                         ChannelModel model = ChannelModel::DS);

/// Three-stage decoder for `encode`. |y| is N - 1 or N.
Sequence decode(const Sequence& y, std::size_t n, int s, ChannelModel model = ChannelModel::DS);

}  // namespace delsub

#include "delsub/codec.hpp"

#include <array>
#include <bit>
#include <set>

#include "delsub/codes.hpp"
#include "delsub/errors.hpp"

namespace delsub {

namespace {

void require_binary(const Sequence& x, const char* what) {
  if (x.q() != 2) throw UnsupportedAlphabet(std::string(what) + " is defined for binary words");
}

}  // namespace

TagLayout tag_layout(std::size_t n, int s) {
  if (s < 0) throw Error("substitution budget must be non-negative");
  TagLayout layout{n, s, code_moduli(Family::C1, 2, n, 1, s), {}, 0};
  for (auto m : layout.moduli) {
    // values lie in [0, m - 1]; bit_width(m - 1) == ceil(log2 m)
    const auto w = static_cast<unsigned>(std::bit_width(m - 1));
    layout.widths.push_back(w);
    layout.bits += w;
  }
  return layout;
}

Tag compute_tag(const Sequence& x, int s) {
  require_binary(x, "the tag");
  const auto layout = tag_layout(x.size(), s);
  Tag tag;
  tag.values = SyndromeTable(Transform::F, x.size(), layout.moduli).residues(x);
  std::vector<Symbol> bits;
  bits.reserve(layout.bits);
  for (std::size_t k = 0; k < tag.values.size(); ++k) {
    for (unsigned b = layout.widths[k]; b-- > 0;) bits.push_back(static_cast<Symbol>((tag.values[k] >> b) & 1u));
  }
  tag.bits = Sequence(std::move(bits), 2);
  return tag;
}

std::vector<std::uint64_t> parse_tag(const Sequence& bits, const TagLayout& layout) {
  if (bits.size() != layout.bits) throw LengthMismatch("tag has the wrong number of bits");
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  for (auto w : layout.widths) {
    std::uint64_t v = 0;
    for (unsigned b = 0; b < w; ++b) v = (v << 1) | bits[pos++];
    values.push_back(v);
  }
  return values;
}

Sequence repetition_encode(const Sequence& u, std::size_t fold) {
  require_binary(u, "repetition coding");
  if (fold < 1) throw Error("repetition fold must be positive");
  std::vector<Symbol> out;
  out.reserve(u.size() * fold);
  for (auto b : u.symbols()) out.insert(out.end(), fold, b);
  return Sequence(std::move(out), 2);
}

CodecLayout codec_layout(std::size_t n, int s) {
  if (n < 1) throw Error("codec needs n >= 1");
  CodecLayout out;
  out.n = n;
  out.s = s;
  out.n1 = tag_layout(n, s).bits;
  out.msg_len = tag_layout(out.n1, s).bits;
  out.fold = static_cast<std::size_t>(2 * s + 2);
  out.n2 = out.fold * out.msg_len;
  out.N = n + out.n1 + out.n2;
  return out;
}

Sequence encode(const Sequence& x, int s) {
  require_binary(x, "encoding");
  if (x.empty()) throw Error("codec needs n >= 1");
  const Sequence t1 = compute_tag(x, s).bits;
  const Sequence t2 = compute_tag(t1, s).bits;
  return x.concat(t1).concat(repetition_encode(t2, static_cast<std::size_t>(2 * s + 2)));
}

Sequence repetition_decode(const Sequence& segment, std::size_t fold, std::size_t msg_len, int s,
                           ChannelModel model) {
  require_binary(segment, "repetition decoding");
  if (fold < 1 || s < 0) throw Error("bad repetition parameters");
  const std::size_t C = fold * msg_len;
  const std::size_t R = segment.size();
  if (R != C && R + 1 != C) {
    throw DecodeFailure("repetition segment has length " + std::to_string(R) + ", expected " + std::to_string(C) +
                        " or one less");
  }
  const std::size_t del = C - R;
  const auto S = static_cast<std::size_t>(s);

  // layer[c][f][o]: prefixes of u consistent with codeword symbols [0, c) after f deletions and
  // o operations. Block bits are fixed when the first symbol of a block is consumed.
  using Prefixes = std::set<std::vector<Symbol>>;
  std::vector<std::array<std::vector<Prefixes>, 2>> layer(C + 2);
  for (auto& l : layer) l = {std::vector<Prefixes>(S + 1), std::vector<Prefixes>(S + 1)};
  layer[0][0][0].insert(std::vector<Symbol>{});

  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t f = 0; f <= del; ++f) {
      for (std::size_t o = 0; o <= S; ++o) {
        for (const auto& prefix : layer[c][f][o]) {
          const std::size_t r = c - f;
          const bool opens = c % fold == 0;
          for (Symbol b = 0; b < 2; ++b) {
            if (!opens && b != prefix.back()) continue;
            std::vector<Symbol> p1 = prefix;
            if (opens) p1.push_back(b);
            if (r < R) {
              const std::size_t cost = segment[r] != b;
              if (o + cost <= S) layer[c + 1][f][o + cost].insert(p1);
            }
            if (f < del) layer[c + 1][f + 1][o].insert(p1);
            if (model == ChannelModel::DST && o < S && c + 1 < C && r + 1 < R) {
              const bool opens2 = (c + 1) % fold == 0;
              for (Symbol b2 = 0; b2 < 2; ++b2) {
                if (!opens2 && b2 != b) continue;
                if (b2 == b || segment[r] != b2 || segment[r + 1] != b) continue;
                std::vector<Symbol> p2 = p1;
                if (opens2) p2.push_back(b2);
                layer[c + 2][f][o + 1].insert(std::move(p2));
              }
            }
          }
        }
      }
    }
  }

  std::set<std::vector<Symbol>> found;
  for (std::size_t o = 0; o <= S; ++o) found.insert(layer[C][del][o].begin(), layer[C][del][o].end());
  if (found.empty()) throw DecodeFailure("no repetition codeword within the error model");
  if (found.size() > 1) throw DecodeFailure("repetition segment is ambiguous");
  return Sequence(*found.begin(), 2);
}

namespace {

struct SearchState {
  const SyndromeTable& table;
  const std::vector<std::uint64_t>& target;
  ChannelModel model;
  std::vector<Symbol> word;
  std::vector<std::uint64_t> syn;
  std::set<std::vector<Symbol>> matches;

  void flip(std::size_t i) {  // 1-based
    const bool up = word[i - 1] == 0;
    word[i - 1] ^= 1;
    for (std::size_t k = 0; k < syn.size(); ++k) {
      const auto m = table.moduli()[k];
      const auto w = table.weight(k, i);
      syn[k] = up ? add_mod(syn[k], w, m) : add_mod(syn[k], m - w, m);
    }
  }

  void swap_at(std::size_t i) {  // word[i], word[i+1] differ
    const bool up = word[i] == 1;  // c_{i+1} - c_i = +1
    std::swap(word[i - 1], word[i]);
    for (std::size_t k = 0; k < syn.size(); ++k) {
      const auto m = table.moduli()[k];
      const auto w = table.power(k, i);
      syn[k] = up ? add_mod(syn[k], w, m) : add_mod(syn[k], m - w, m);
    }
  }

  void check() {
    if (syn == target) matches.insert(word);
  }

  void search(std::size_t from, int budget) {
    check();
    if (budget == 0) return;
    const std::size_t n = word.size();
    if (model == ChannelModel::DS) {
      for (std::size_t i = from; i <= n; ++i) {
        flip(i);
        search(i + 1, budget - 1);
        flip(i);
      }
      return;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      flip(i);
      search(1, budget - 1);
      flip(i);
      if (i < n && word[i - 1] != word[i]) {
        swap_at(i);
        search(1, budget - 1);
        swap_at(i);
      }
    }
  }
};

}  // namespace

Sequence syndrome_decode(const Sequence& y, std::size_t n, int s, const std::vector<std::uint64_t>& residues,
                         ChannelModel model) {
  require_binary(y, "syndrome decoding");
  if (s < 0) throw Error("substitution budget must be non-negative");
  if (y.size() != n && y.size() + 1 != n) {
    throw DecodeFailure("received length " + std::to_string(y.size()) + " incompatible with n = " + std::to_string(n));
  }
  const SyndromeTable table(Transform::F, n, code_moduli(Family::C1, 2, n, 1, s));
  if (residues.size() != table.moduli().size()) throw Error("wrong number of residues");

  std::vector<Sequence> bases;
  if (y.size() == n) {
    bases.push_back(y);
  } else {
    for (std::size_t p = 1; p <= n; ++p) {
      for (Symbol b = 0; b < 2; ++b) {
        if (p > 1 && y[p - 2] == b) continue;  // same word as inserting one slot earlier
        bases.push_back(y.insert(p, b));
      }
    }
  }

  std::set<std::vector<Symbol>> matches;
  for (const auto& base : bases) {
    SearchState st{table, residues, model, {base.symbols().begin(), base.symbols().end()}, table.residues(base), {}};
    st.search(1, s);
    matches.insert(st.matches.begin(), st.matches.end());
  }
  if (matches.empty()) throw DecodeFailure("no codeword within the error model");
  if (matches.size() > 1) {
    auto it = matches.begin();
    const Sequence a(*it++, 2), b(*it, 2);
    throw InvariantViolation("two codewords " + a.str() + " and " + b.str() + " explain " + y.str());
  }
  return Sequence(*matches.begin(), 2);
}

Sequence decode(const Sequence& y, std::size_t n, int s, ChannelModel model) {
  require_binary(y, "decoding");
  const auto L = codec_layout(n, s);
  bool short_by_one;
  if (y.size() + 1 == L.N) short_by_one = true;
  else if (y.size() == L.N) short_by_one = false;
  else throw DecodeFailure("received length " + std::to_string(y.size()) + ", expected " + std::to_string(L.N - 1));

  const std::size_t cut = short_by_one ? 1 : 0;
  const Sequence tail = y.slice(n + L.n1 + 1, L.N - cut);
  const Sequence middle = y.slice(n + 1, n + L.n1 - cut);
  const Sequence head = y.slice(1, n - cut);

  const Sequence inner = repetition_decode(tail, L.fold, L.msg_len, s, model);
  const auto inner_residues = parse_tag(inner, tag_layout(L.n1, s));
  const Sequence outer = syndrome_decode(middle, L.n1, s, inner_residues, model);
  const auto outer_residues = parse_tag(outer, tag_layout(n, s));
  return syndrome_decode(head, n, s, outer_residues, model);
}

}  // namespace delsub

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "delsub/cli.hpp"
#include "delsub/codec.hpp"
#include "delsub/codes.hpp"
#include "delsub/errors.hpp"
#include "delsub/oracle.hpp"
#include "delsub/partition.hpp"
#include "delsub/serialize.hpp"

namespace py = pybind11;
using namespace delsub;

namespace {

std::vector<std::string> strs(const std::vector<Sequence>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<Sequence> seqs(const std::vector<std::string>& v, int q) {
  std::vector<Sequence> out;
  for (const auto& s : v) out.push_back(Sequence::parse(s, q));
  return out;
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_delsub, m) {
  m.doc() = "Deletion/substitution codes: transforms, balls, codes, codec and oracles";

  static py::exception<Error> base(m, "Error");
  static py::exception<DecodeFailure> decode_failure(m, "DecodeFailure", base.ptr());
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", base.ptr());
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DecodeFailure& e) {
      py::set_error(decode_failure, e.what());
    } catch (const CapExceeded& e) {
      py::set_error(cap_exceeded, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("accumulative", [](const std::string& x, int q) { return accumulative(Sequence::parse(x, q)).entries; },
        py::arg("x"), py::arg("q") = 2);
  m.def("differential", [](const std::string& x, int q) { return differential(Sequence::parse(x, q)).str(); },
        py::arg("x"), py::arg("q") = 2);
  m.def(
      "accumulative_differential",
      [](const std::string& x, int q) { return accumulative_differential(Sequence::parse(x, q)).entries; },
      py::arg("x"), py::arg("q") = 2);
  m.def("sign_preserving_number", [](const std::vector<std::int64_t>& z) { return sign_preserving_number(z); });
  m.def(
      "vt_syndrome",
      [](const std::vector<std::int64_t>& z, unsigned k) {
        return py::int_(py::str(vt_syndrome(z, k).str()));
      },
      py::arg("z"), py::arg("k"));

  m.def(
      "ball",
      [](const std::string& x, const std::string& kind, int t, int s, int q) {
        const auto c = Sequence::parse(x, q);
        if (kind == "ds") return strs(del_sub_ball(c, t, s).members);
        if (kind == "dst") return strs(del_sub_trans_ball(c, t, s).members);
        if (kind == "burst") return strs(burst_deletion_ball(c, t).members);
        throw ParseError("kind must be ds, dst or burst");
      },
      py::arg("x"), py::arg("kind") = "ds", py::arg("t") = 1, py::arg("s") = 0, py::arg("q") = 2);

  m.def(
      "partition",
      [](const std::string& x, const std::string& y, int t, int s, const std::string& model) -> py::object {
        const auto p = partition_pair(Sequence::parse(x, 2), Sequence::parse(y, 2), t, s, parse_channel_model(model));
        if (!p) return py::none();
        return from_json(to_json(*p));
      },
      py::arg("x"), py::arg("y"), py::arg("t") = 1, py::arg("s") = 0, py::arg("model") = "DS");

  m.def(
      "enumerate_code",
      [](const std::string& family, std::size_t n, const std::vector<std::uint64_t>& a, int q, int t, int s) {
        return strs(enumerate_code({parse_family(family), q, n, t, s, a}));
      },
      py::arg("family"), py::arg("n"), py::arg("a"), py::arg("q") = 2, py::arg("t") = 1, py::arg("s") = 0);
  m.def(
      "is_member",
      [](const std::string& x, const std::string& family, const std::vector<std::uint64_t>& a, int q, int t, int s) {
        const auto w = Sequence::parse(x, q);
        return is_member(w, {parse_family(family), q, w.size(), t, s, a});
      },
      py::arg("x"), py::arg("family"), py::arg("a"), py::arg("q") = 2, py::arg("t") = 1, py::arg("s") = 0);

  m.def(
      "verify_code",
      [](const std::vector<std::string>& words, const std::string& mode, int q) {
        return from_json(to_json(verify_code(seqs(words, q), parse_verify_mode(mode))));
      },
      py::arg("codewords"), py::arg("mode"), py::arg("q") = 2);

  m.def(
      "encode", [](const std::string& x, int s) { return encode(Sequence::parse(x, 2), s).str(); }, py::arg("x"),
      py::arg("s") = 1);
  m.def(
      "decode",
      [](const std::string& y, std::size_t n, int s, const std::string& model) {
        return decode(Sequence::parse(y, 2), n, s, parse_channel_model(model)).str();
      },
      py::arg("y"), py::arg("n"), py::arg("s") = 1, py::arg("model") = "DS");
  m.def(
      "codec_layout",
      [](std::size_t n, int s) {
        const auto l = codec_layout(n, s);
        return py::dict(py::arg("n") = l.n, py::arg("s") = l.s, py::arg("n1") = l.n1, py::arg("n2") = l.n2,
                        py::arg("N") = l.N);
      },
      py::arg("n"), py::arg("s") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"delsub"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

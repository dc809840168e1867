#include "delsub/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "delsub/audit.hpp"
#include "delsub/codec.hpp"
#include "delsub/codes.hpp"
#include "delsub/errors.hpp"
#include "delsub/oracle.hpp"
#include "delsub/partition.hpp"
#include "delsub/rng.hpp"
#include "delsub/serialize.hpp"

namespace delsub::cli {

namespace {

struct Config {
  std::string format = "plain";
  unsigned threads = 1;
  std::uint64_t enum_cap = kDefaultEnumCap;
  std::uint64_t ball_cap = kDefaultBallCap;
  std::uint64_t seed = 0;
};

std::vector<std::uint64_t> parse_residues(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad residue '" + item + "'");
    }
  }
  return out;
}

// "4-10" or "7".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dash)), std::stoul(text.substr(dash + 1))};
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + text + "'");
  }
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string read_word(const std::string& given) {
  if (!given.empty()) return given;
  std::string line;
  std::getline(std::cin, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  return line;
}

IntSequence as_integers(const std::string& text, int q) {
  if (text.find_first_of(",-") != std::string::npos) return IntSequence::parse(text);
  return IntSequence::from(Sequence::parse(text, q));
}

const char* kCsvHelp =
    "CSV columns. code best: family,q,n,t,s,best_size,pigeonhole_floor,redundancy_bits. "
    "verify: the same followed by mode,codes_checked,codes_failed,ok. "
    "verify --audit: name,cases,violations,ok.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deletion/substitution code toolkit", "delsub"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--enum-cap", cfg.enum_cap, "Largest word space to enumerate")
      ->envname("DELSUB_ENUM_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--ball-cap", cfg.ball_cap, "Largest ball to materialize")
      ->envname("DELSUB_BALL_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.fallthrough();

  int status = kExitOk;
  auto emit = [&](const Json& j, const std::string& plain) {
    if (cfg.format == "json") out << j.dump() << "\n";
    else out << plain;
  };

  // transform
  auto* transform = app.add_subcommand("transform", "f, d, g, sigma or VT of a word");
  std::string op = "f";
  int q = 2;
  std::string word;
  unsigned vt_k = 0;
  std::uint64_t vt_mod = 0;
  transform->add_option("--op", op)->check(CLI::IsMember({"f", "d", "g", "sigma", "vt"}));
  transform->add_option("--q", q);
  transform->add_option("--k", vt_k, "VT exponent");
  transform->add_option("--mod", vt_mod, "VT modulus (0 = exact)");
  transform->add_option("word", word, "Digits, or comma-separated integers for sigma/vt");
  transform->callback([&] {
    check_alphabet(q);
    const auto text = read_word(word);
    std::string result;
    if (op == "f") result = accumulative(Sequence::parse(text, q)).str();
    else if (op == "d") result = differential(Sequence::parse(text, q)).str();
    else if (op == "g") result = accumulative_differential(Sequence::parse(text, q)).str();
    else if (op == "sigma") result = std::to_string(sign_preserving_number(as_integers(text, q)));
    else if (vt_mod == 0) result = vt_syndrome(as_integers(text, q), vt_k).str();
    else result = std::to_string(vt_syndrome_mod(as_integers(text, q), vt_k, vt_mod));
    emit({{"op", op}, {"input", text}, {"output", result}}, result + "\n");
  });

  // ball
  auto* ball = app.add_subcommand("ball", "Materialize an error ball");
  std::string kind = "ds";
  int t = 1, s = 0;
  ball->add_option("--kind", kind)->check(CLI::IsMember({"ds", "dst", "burst"}));
  ball->add_option("--t", t);
  ball->add_option("--s", s);
  ball->add_option("--q", q);
  ball->add_option("word", word)->required();
  ball->callback([&] {
    const auto x = Sequence::parse(word, q);
    const Ball b = kind == "ds"    ? del_sub_ball(x, t, s, cfg.ball_cap)
                   : kind == "dst" ? del_sub_trans_ball(x, t, s, cfg.ball_cap)
                                   : burst_deletion_ball(x, t, cfg.ball_cap);
    std::string plain = cfg.format == "csv" ? "member\n" : "";
    for (const auto& m : b.members) plain += m.str() + "\n";
    emit({{"center", x.str()}, {"kind", to_string(b.kind)}, {"t", t}, {"s", s}, {"size", b.size()},
          {"members", to_json(b)}},
         plain);
  });

  // partition
  auto* part = app.add_subcommand("partition", "Certificate and partition for a pair of words");
  std::string model_name = "DS", y_word;
  part->add_option("--t", t);
  part->add_option("--s", s);
  part->add_option("--q", q);
  part->add_option("--model", model_name)->check(CLI::IsMember({"DS", "DST", "ds", "dst"}));
  part->add_option("x", word)->required();
  part->add_option("y", y_word)->required();
  part->callback([&] {
    const auto x = Sequence::parse(word, q);
    const auto y = Sequence::parse(y_word, q);
    if (x.size() != y.size()) throw LengthMismatch("x and y must have equal length");
    const auto model = parse_channel_model(model_name);
    const auto cert = find_certificate(x, y, t, s, model);
    Json j{{"x", x.str()}, {"y", y.str()}, {"t", t}, {"s", s}, {"model", to_string(model)}};
    if (!cert) {
      j["intersect"] = false;
      out << j.dump() << "\n";
      return;
    }
    const auto p = partition_from_certificate(*cert, t);
    j["intersect"] = true;
    j["certificate"] = to_json(*cert);
    j["partition"] = to_json(p);
    j["parts"] = p.parts();
    j["verified"] = verify_partition(x, y, p, t, static_cast<std::size_t>(2 * t + 2 * s - 1));
    if (!j["verified"].get<bool>()) status = kExitFailure;
    out << j.dump() << "\n";
  });

  // code enum|member|best
  auto* code = app.add_subcommand("code", "Code families");
  code->require_subcommand(1);
  std::string family_name = "C1", residues_text = "0", rule_name = "exact";
  std::size_t n = 0;
  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--family", family_name)->check(CLI::IsMember({"C1", "C2", "C3", "C4"}));
    sub->add_option("--q", q);
    sub->add_option("--n", n)->required();
    sub->add_option("--t", t);
    sub->add_option("--s", s);
    sub->add_option("--rule", rule_name)->check(CLI::IsMember({"exact", "drop-factor", "off-by-one"}));
  };
  auto params = [&] {
    CodeParams p{parse_family(family_name), q, n, t, s, parse_residues(residues_text)};
    const auto count = residue_count(p.family, p.t, p.s);
    if (p.residues.size() == 1 && count > 1) p.residues.resize(count, p.residues[0]);
    return p;
  };
  auto* code_enum = code->add_subcommand("enum", "List the codewords");
  add_family_options(code_enum);
  code_enum->add_option("--a", residues_text, "Residues a_0,...,a_K (one value repeats)");
  code_enum->callback([&] {
    const auto words = enumerate_code(params(), cfg.enum_cap, parse_modulus_rule(rule_name));
    Json list = Json::array();
    std::string plain = cfg.format == "csv" ? "codeword\n" : "";
    for (const auto& w : words) {
      list.push_back(w.str());
      plain += w.str() + "\n";
    }
    emit({{"params", to_json(params())}, {"size", words.size()}, {"codewords", list}}, plain);
  });
  auto* code_member = code->add_subcommand("member", "Membership test");
  add_family_options(code_member);
  code_member->add_option("--a", residues_text);
  code_member->add_option("word", word)->required();
  code_member->callback([&] {
    const bool in = is_member(Sequence::parse(word, q), params(), parse_modulus_rule(rule_name));
    emit({{"word", word}, {"member", in}}, std::string(in ? "true" : "false") + "\n");
  });
  auto* code_best = code->add_subcommand("best", "Largest residue class");
  add_family_options(code_best);
  code_best->callback([&] {
    const auto b = best_residues(parse_family(family_name), q, n, t, s, cfg.enum_cap, parse_modulus_rule(rule_name),
                                 cfg.threads);
    if (cfg.format == "csv") {
      out << bucket_csv_header() << "\n" << bucket_csv_row(b) << "\n";
      return;
    }
    emit({{"params", to_json(b.best)},
          {"best_size", b.best_size},
          {"eligible", b.eligible},
          {"moduli_product", b.product.str()},
          {"pigeonhole_floor", b.floor.str()},
          {"redundancy_bits", b.redundancy_bits}},
         "residues " + join(b.best.residues) + "\nsize " + std::to_string(b.best_size) + "\nfloor " +
             b.floor.str() + "\n");
  });

  // encode / decode
  auto header = [](const CodecLayout& l) {
    return Json{{"n", l.n}, {"s", l.s}, {"N", l.N}, {"n1", l.n1}, {"n2", l.n2}};
  };
  auto* enc = app.add_subcommand("encode", "Systematic encoder (binary, one deletion, s substitutions)");
  enc->add_option("--s", s);
  enc->add_option("word", word, "Message bits (read from stdin when absent)");
  enc->callback([&] {
    const auto x = Sequence::parse(read_word(word), 2);
    const auto c = encode(x, s);
    auto h = header(codec_layout(x.size(), s));
    if (cfg.format == "json") {
      h["codeword"] = c.str();
      out << h.dump() << "\n";
    } else {
      out << h.dump() << "\n" << c.str() << "\n";
    }
  });
  auto* dec = app.add_subcommand("decode", "Decoder for encode");
  dec->add_option("--n", n)->required();
  dec->add_option("--s", s);
  dec->add_option("--model", model_name)->check(CLI::IsMember({"DS", "DST", "ds", "dst"}));
  dec->add_option("word", word, "Received bits (read from stdin when absent)");
  dec->callback([&] {
    const auto y = Sequence::parse(read_word(word), 2);
    auto h = header(codec_layout(n, s));
    const auto x = decode(y, n, s, parse_channel_model(model_name));
    if (cfg.format == "json") {
      h["message"] = x.str();
      out << h.dump() << "\n";
    } else {
      out << h.dump() << "\n" << x.str() << "\n";
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive code and property sweeps");
  std::string n_range = "4", mode_text, strategy_name = "best", audit_name;
  verify->add_option("--family", family_name)->check(CLI::IsMember({"C1", "C2", "C3", "C4"}));
  verify->add_option("--q", q);
  verify->add_option("--n", n_range, "Length or range such as 4-10");
  verify->add_option("--t", t);
  verify->add_option("--s", s);
  verify->add_option("--mode", mode_text, "DS(t,s), DST(t,s) or Burst(t); defaults to DS(t,s)");
  verify->add_option("--residues", strategy_name)->check(CLI::IsMember({"best", "all"}));
  verify->add_option("--rule", rule_name)->check(CLI::IsMember({"exact", "drop-factor", "off-by-one"}));
  verify->add_option("--audit", audit_name, "Property sweep instead of a code sweep")
      ->check(CLI::IsMember({"sign", "del", "del-g", "burst", "good", "valid", "windows", "insertion", "partition",
                             "partition-dst"}));
  verify->callback([&] {
    const auto [lo, hi] = parse_range(n_range);
    if (!audit_name.empty()) {
      AuditReport r;
      if (audit_name == "sign") r = audit_sign(hi);
      else if (audit_name == "del") r = audit_single_deletion_f(hi);
      else if (audit_name == "del-g") r = audit_single_deletion_g(q, hi);
      else if (audit_name == "burst") r = audit_burst_two_g(hi);
      else if (audit_name == "good") r = audit_good_pairs(t, hi);
      else if (audit_name == "valid") r = audit_valid_pairs(q, t, hi);
      else if (audit_name == "windows") r = audit_valid_windows(q, t, hi);
      else if (audit_name == "insertion") r = audit_pair_insertion(q, hi);
      else {
        const auto model = audit_name == "partition" ? ChannelModel::DS : ChannelModel::DST;
        r.name = "partition";
        for (std::size_t len = lo; len <= hi; ++len) {
          const auto one = audit_partitions(len, t, s, model, cfg.threads);
          if (one.violations && r.ok()) r.first_violation = one.first_violation;
          r.cases += one.cases;
          r.violations += one.violations;
        }
      }
      if (!r.ok()) status = kExitFailure;
      if (cfg.format == "json") out << to_json(r).dump() << "\n";
      else if (cfg.format == "csv") {
        out << "name,cases,violations,ok\n"
            << r.name << "," << r.cases << "," << r.violations << "," << (r.ok() ? 1 : 0) << "\n";
      } else {
        out << r.name << ": " << r.cases << " cases, " << r.violations << " violations";
        if (!r.ok()) out << " (first: " << r.first_violation << ")";
        out << "\n";
      }
      return;
    }
    const auto family = parse_family(family_name);
    const auto mode = mode_text.empty() ? VerifyMode{BallKind::DelSub, t, s} : parse_verify_mode(mode_text);
    Json cells = Json::array();
    if (cfg.format == "csv") out << cell_csv_header() << "\n";
    for (std::size_t len = lo; len <= hi; ++len) {
      const auto cell = verify_family_cell(family, q, len, t, s, mode, parse_residue_strategy(strategy_name),
                                           parse_modulus_rule(rule_name), cfg.enum_cap, cfg.ball_cap, cfg.threads);
      if (!cell.ok()) status = kExitFailure;
      if (cfg.format == "csv") out << cell_csv_row(cell) << "\n";
      else if (cfg.format == "json") cells.push_back(to_json(cell));
      else {
        out << to_string(family) << " q=" << q << " n=" << len << " " << to_string(mode) << ": "
            << cell.codes_checked - cell.codes_failed << "/" << cell.codes_checked << " codes ok, best size "
            << cell.best_size << ", floor " << cell.floor.str();
        if (cell.first_counterexample) {
          const auto& c = *cell.first_counterexample;
          out << ", counterexample x=" << c.x.str() << " y=" << c.y.str() << " z=" << c.z.str();
        }
        out << "\n";
      }
    }
    if (cfg.format == "json") out << cells.dump() << "\n";
  });

  // simulate
  auto* sim = app.add_subcommand("simulate", "Random channel roundtrips through encode/decode");
  std::size_t trials = 1000;
  sim->add_option("--n", n)->required();
  sim->add_option("--s", s);
  sim->add_option("--trials", trials);
  sim->add_option("--model", model_name)->check(CLI::IsMember({"DS", "DST", "ds", "dst"}));
  sim->callback([&] {
    const auto model = parse_channel_model(model_name);
    SplitMix64 rng(cfg.seed);
    std::size_t decoded = 0;
    Json failures = Json::array();
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<Symbol> bits(n);
      for (auto& b : bits) b = static_cast<Symbol>(rng.next() & 1);
      const Sequence x(std::move(bits), 2);
      const auto c = encode(x, s);
      const auto corrupted = sample_corruption(c, 1, s, model, rng.next());
      bool good = false;
      try {
        good = decode(corrupted.received, n, s, model) == x;
      } catch (const DecodeFailure&) {
      }
      if (good) ++decoded;
      else if (failures.size() < 10) failures.push_back({{"x", x.str()}, {"script", to_json(corrupted.script)}});
    }
    if (decoded != trials) status = kExitFailure;
    emit({{"trials", trials}, {"decoded", decoded}, {"failures", failures}},
         std::to_string(decoded) + "/" + std::to_string(trials) + " decoded\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace delsub::cli

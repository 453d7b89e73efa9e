// llq: exact solver toolkit for quadratic equations over the lamplighter
// group Z_2 wr Z. Exit codes: 0 decided yes, 1 decided no, 2 input error,
// 3 oracle disagreement.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "llq/conjugacy.hpp"
#include "llq/element.hpp"
#include "llq/equation.hpp"
#include "llq/hardness.hpp"
#include "llq/solver.hpp"
#include "llq/word.hpp"

namespace {

using json = nlohmann::json;

struct Options {
  bool as_json = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t max_len = 10'000'000;
};

std::string supp_string(const llq::LampConfig& f) {
  std::string s = "[";
  bool first = true;
  f.for_each_bit([&](long long p) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  });
  return s + "]";
}

json supp_json(const llq::LampConfig& f) {
  json a = json::array();
  f.for_each_bit([&](long long p) { a.push_back(p); });
  return a;
}

llq::GroupWord parse_arg(const std::string& text, const Options& opt) {
  return llq::parse_word(text, opt.max_len);
}

int cmd_eval(const std::string& word, const Options& opt) {
  const llq::LampElement g = llq::eval(parse_arg(word, opt));
  if (opt.as_json) {
    json out{{"delta", g.delta},
             {"supp", supp_json(g.lamps)},
             {"sigma_a", llq::sigma_a(g)},
             {"canonical", llq::serialize(llq::to_word(g))}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "delta=" << g.delta << " supp=" << supp_string(g.lamps) << "\n";
  }
  return 0;
}

int cmd_is_square(const std::string& word, const Options& opt) {
  const llq::LampElement g = llq::eval(parse_arg(word, opt));
  const auto root = llq::sqrt_witness(g);
  if (opt.as_json) {
    json out{{"square", root.has_value()}};
    if (root) out["root"] = llq::serialize(llq::to_word(*root));
    std::cout << out.dump() << "\n";
  } else if (root) {
    std::cout << "square=yes root=" << llq::serialize(llq::to_word(*root)) << "\n";
  } else {
    std::cout << "square=no\n";
  }
  return root ? 0 : 1;
}

int cmd_in_derived(const std::string& word, const Options& opt) {
  const llq::LampElement g = llq::eval(parse_arg(word, opt));
  const bool yes = llq::in_derived(g);
  json out{{"derived", yes}};
  std::string text = yes ? "derived=yes" : "derived=no";
  if (yes) {
    const auto [x, y] = llq::commutator_witness(g);
    out["x"] = llq::serialize(llq::to_word(x));
    out["y"] = llq::serialize(llq::to_word(y));
    text += "\nx=" + llq::serialize(llq::to_word(x)) + "\ny=" + llq::serialize(llq::to_word(y));
  }
  std::cout << (opt.as_json ? out.dump() : text) << "\n";
  return yes ? 0 : 1;
}

int cmd_in_v(const std::string& word, const Options& opt) {
  const llq::LampElement g = llq::eval(parse_arg(word, opt));
  const bool yes = llq::in_V(g);
  json out{{"inV", yes}};
  std::string text = yes ? "inV=yes" : "inV=no";
  if (yes) {
    const auto [x, y] = llq::two_squares_witness(g);
    out["x"] = llq::serialize(llq::to_word(x));
    out["y"] = llq::serialize(llq::to_word(y));
    text += "\nx=" + llq::serialize(llq::to_word(x)) + "\ny=" + llq::serialize(llq::to_word(y));
  }
  std::cout << (opt.as_json ? out.dump() : text) << "\n";
  return yes ? 0 : 1;
}

int cmd_conj(const std::string& w1, const std::string& w2, bool search, const Options& opt) {
  const llq::LampElement c1 = llq::eval(parse_arg(w1, opt));
  const llq::LampElement c2 = llq::eval(parse_arg(w2, opt));
  if (search) {
    const llq::ConjugacyAnswer ans = llq::find_conjugator(c1, c2);
    if (opt.as_json) {
      json out{{"conjugate", ans.conjugate}};
      if (ans.conjugate) {
        out["conjugator"] = llq::serialize(*ans.conjugator);
        out["shift"] = *ans.shift;
      }
      std::cout << out.dump() << "\n";
    } else if (ans.conjugate) {
      std::cout << "conjugate=yes\nconjugator=" << llq::serialize(*ans.conjugator)
                << "\nshift=" << *ans.shift << "\n";
    } else {
      std::cout << "conjugate=no\n";
    }
    return ans.conjugate ? 0 : 1;
  }
  const bool yes = llq::is_conjugate(c1, c2);
  if (opt.as_json)
    std::cout << json{{"conjugate", yes}}.dump() << "\n";
  else
    std::cout << (yes ? "conjugate=yes" : "conjugate=no") << "\n";
  return yes ? 0 : 1;
}

std::string shifts_csv(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_solve(const std::string& path, long long oracle_bound, const Options& opt) {
  const llq::EquationFile file = llq::read_equation_file(path);
  llq::SolveOptions sopts;
  sopts.threads = opt.threads;
  const llq::SolveResult res = llq::solve(file.eq, sopts);

  std::vector<std::array<long long, 3>> partition;
  const auto marker = llq::find_instance_marker(file.comments);
  if (marker && res.decision && res.certificate && res.certificate->modulus == 0)
    partition = llq::decode_3part(*marker, *res.certificate);

  if (opt.as_json) {
    json out{{"decision", res.decision},
             {"verified", res.witness ? res.witness->verified : false},
             {"enumerated", res.stats.enumerated},
             {"millis", res.stats.millis}};
    if (res.certificate) {
      out["d"] = res.certificate->modulus;
      out["shifts"] = res.certificate->shifts;
    }
    if (res.witness) {
      json w = json::object();
      for (const auto& [name, word] : res.witness->assignment) w[name] = llq::serialize(word);
      out["witness"] = w;
    }
    if (!partition.empty()) {
      json p = json::array();
      for (const auto& t : partition) p.push_back(json::array({t[0], t[1], t[2]}));
      out["partition"] = p;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "decision=" << (res.decision ? "yes" : "no") << "\n";
    if (res.certificate) {
      std::cout << "d=" << res.certificate->modulus << "\n";
      std::cout << "shifts=" << shifts_csv(res.certificate->shifts) << "\n";
    }
    if (res.witness)
      for (const auto& [name, word] : res.witness->assignment)
        std::cout << "witness." << name << "=" << llq::serialize(word) << "\n";
    std::cout << "verified=" << ((res.witness && res.witness->verified) ? "true" : "false")
              << "\n";
    if (!partition.empty()) {
      std::string p;
      for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i) p += '|';
        p += std::to_string(partition[i][0]) + "+" + std::to_string(partition[i][1]) + "+" +
             std::to_string(partition[i][2]);
      }
      std::cout << "partition=" << p << "\n";
    }
    std::cout << "enumerated=" << res.stats.enumerated << "\n";
    std::cout << "millis=" << res.stats.millis << "\n";
  }

  if (oracle_bound > 0) {
    const bool oracle = llq::oracle_solve(file.eq, oracle_bound);
    if (oracle != res.decision) {
      std::cerr << "error: oracle disagreement (solve=" << (res.decision ? "yes" : "no")
                << " oracle=" << (oracle ? "yes" : "no") << ")\n";
      return 3;
    }
  }
  return res.decision ? 0 : 1;
}

int cmd_oracle(const std::string& path, long long bound, const Options& opt) {
  const llq::EquationFile file = llq::read_equation_file(path);
  const bool yes = llq::oracle_solve(file.eq, bound);
  if (opt.as_json)
    std::cout << json{{"oracle", yes}, {"bound", bound}}.dump() << "\n";
  else
    std::cout << "oracle=" << (yes ? "yes" : "no") << "\n";
  return yes ? 0 : 1;
}

int cmd_encode(const std::string& inst_path, const std::string& out_path, const Options&) {
  std::ifstream in(inst_path, std::ios::binary);
  if (!in) throw llq::invalid_instance("cannot open '" + inst_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const llq::TPartInstance inst = llq::parse_instance_text(buf.str());
  const llq::QuadEquation eq = llq::encode_3part(inst);
  const std::string text = llq::format_equation(eq, {llq::instance_marker(inst)});
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw llq::invalid_instance("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

// --- bench -----------------------------------------------------------------

std::uint64_t rng_next(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

llq::GroupWord random_word(std::uint64_t& s, std::size_t len) {
  llq::GroupWord w;
  w.letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back(static_cast<llq::Letter>(rng_next(s) % 4));
  return w;
}

llq::GroupWord balanced_word(std::uint64_t& s, std::size_t len) {
  llq::GroupWord w = random_word(s, len);
  w.append_t(-llq::sigma_t(w));
  return w;
}

double time_once(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_bench(const std::string& suite, const std::vector<std::size_t>& sizes,
              const Options& opt) {
  std::cout << "W,k,millis,enumerated\n";
  for (std::size_t n : sizes) {
    std::uint64_t s = opt.seed ^ (0xabcdef12345678ULL + n);
    if (suite == "conj") {
      const llq::GroupWord g = random_word(s, n);
      llq::GroupWord zw = random_word(s, std::max<std::size_t>(1, n / 4));
      llq::GroupWord c2w = zw.inverse();
      c2w.append(g);
      c2w.append(zw);
      const std::size_t W = g.size() + c2w.size();
      double ms = time_once([&] {
        const auto ans = llq::find_conjugator(llq::eval(g), llq::eval(c2w));
        if (!ans.conjugate) throw std::logic_error("bench: constructed pair not conjugate");
      });
      std::cout << W << ",2," << ms << ",0\n";
    } else if (suite == "orientable") {
      llq::QuadEquation eq;
      eq.form = llq::EquationForm::Orientable;
      eq.genus = 1;
      eq.coeffs.push_back(balanced_word(s, n / 2));
      llq::GroupWord c2 = balanced_word(s, n / 2);
      if (llq::sigma_a(eq.coeffs[0]) + llq::sigma_a(c2) == 1) c2.letters.push_back(llq::Letter::A);
      eq.coeffs.push_back(c2);
      llq::SolveResult res;
      double ms = time_once([&] { res = llq::solve_orientable(eq); });
      std::cout << eq.size_w() << "," << eq.k() << "," << ms << "," << res.stats.enumerated
                << "\n";
    } else if (suite == "spherical") {
      llq::QuadEquation eq;
      eq.form = llq::EquationForm::Spherical;
      const llq::GroupWord c1 = balanced_word(s, n / 2);
      const llq::LampElement conj_by{static_cast<long long>(rng_next(s) % 16),
                                     llq::LampConfig::single(0)};
      eq.coeffs.push_back(c1);
      eq.coeffs.push_back(llq::to_word(llq::inv(llq::conjugate(llq::eval(c1), conj_by))));
      llq::SolveOptions so;
      so.threads = opt.threads;
      llq::SolveResult res;
      double ms = time_once([&] { res = llq::solve_spherical(eq, so); });
      std::cout << eq.size_w() << "," << eq.k() << "," << ms << "," << res.stats.enumerated
                << "\n";
    } else if (suite == "genus1") {
      llq::QuadEquation eq;
      eq.form = llq::EquationForm::NonOrientable;
      eq.genus = 1;
      llq::GroupWord c1 = random_word(s, n / 2);
      llq::GroupWord c2 = random_word(s, n / 2);
      const long long total = llq::sigma_t(c1) + llq::sigma_t(c2);
      if (total % 2 != 0) c2.letters.push_back(llq::Letter::T);
      if (llq::sigma_t(c1) + llq::sigma_t(c2) == 0) c2.append_t(2);
      eq.coeffs.push_back(c1);
      eq.coeffs.push_back(c2);
      llq::SolveOptions so;
      so.threads = opt.threads;
      llq::SolveResult res;
      double ms = time_once([&] { res = llq::solve_nonorientable(eq, so); });
      std::cout << eq.size_w() << "," << eq.k() << "," << ms << "," << res.stats.enumerated
                << "\n";
    } else if (suite == "3part") {
      const long long k = 2 + static_cast<long long>(n % 2);
      const long long target = std::max<long long>(9, static_cast<long long>(n));
      const llq::TPartInstance inst = llq::random_3part(k, target, opt.seed + n);
      const llq::QuadEquation eq = llq::encode_3part(inst);
      llq::SolveResult res;
      double ms = time_once([&] { res = llq::solve_spherical(eq); });
      std::cout << eq.size_w() << "," << eq.k() << "," << ms << "," << res.stats.enumerated
                << "\n";
    } else {
      throw std::runtime_error("unknown bench suite '" + suite +
                               "' (conj|orientable|spherical|genus1|3part)");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quadratic-equation toolkit for the lamplighter group"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable JSON output");
  app.add_option("--threads", opt.threads, "parallel workers for tuple enumeration")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", opt.seed, "seed for generated suites");
  app.add_option("--max-len", opt.max_len, "cap on expanded word length")
      ->envname("LLQ_MAX_LEN");

  std::string word, word2, path, out_path = "", suite;
  bool search = false;
  long long oracle_bound = 0, bound = 0;
  std::vector<std::size_t> sizes{1000, 10000, 100000};

  auto* c_eval = app.add_subcommand("eval", "evaluate a word to (delta, supp)");
  c_eval->add_option("word", word)->required();

  auto* c_sq = app.add_subcommand("is-square", "square test with root witness");
  c_sq->add_option("word", word)->required();

  auto* c_der = app.add_subcommand("in-derived", "derived-subgroup test with commutator witness");
  c_der->add_option("word", word)->required();

  auto* c_v = app.add_subcommand("in-V", "squares-subgroup test with two-squares witness");
  c_v->add_option("word", word)->required();

  auto* c_conj = app.add_subcommand("conj", "conjugacy decision / search");
  c_conj->add_option("w1", word)->required();
  c_conj->add_option("w2", word2)->required();
  c_conj->add_flag("--search", search, "also produce a verified conjugator");

  auto* c_solve = app.add_subcommand("solve", "solve an equation file");
  c_solve->add_option("file", path)->required();
  c_solve->add_option("--oracle-check", oracle_bound,
                      "cross-check against the bounded oracle; exit 3 on disagreement");

  auto* c_oracle = app.add_subcommand("oracle", "bounded brute-force decision");
  c_oracle->add_option("file", path)->required();
  c_oracle->add_option("-b,--bound", bound)->required();

  auto* c_enc = app.add_subcommand("encode-3part", "encode a 3-partition instance");
  c_enc->add_option("file", path)->required();
  c_enc->add_option("-o,--output", out_path);

  auto* c_bench = app.add_subcommand("bench", "CSV scaling measurements");
  c_bench->add_option("suite", suite)->required();
  c_bench->add_option("--sizes", sizes)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_eval) return cmd_eval(word, opt);
    if (*c_sq) return cmd_is_square(word, opt);
    if (*c_der) return cmd_in_derived(word, opt);
    if (*c_v) return cmd_in_v(word, opt);
    if (*c_conj) return cmd_conj(word, word2, search, opt);
    if (*c_solve) return cmd_solve(path, oracle_bound, opt);
    if (*c_oracle) return cmd_oracle(path, bound, opt);
    if (*c_enc) return cmd_encode(path, out_path, opt);
    if (*c_bench) return cmd_bench(suite, sizes, opt);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

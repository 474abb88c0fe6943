// Copyright 2026 The hgcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hgcode: command-line front end.
//
// Exit status: 0 success, 1 usage or input error, 2 feasibility guard,
// 3 selftest disagreement.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgcode/codec.hpp"
#include "hgcode/io.hpp"
#include "hgcode/line_enum.hpp"
#include "hgcode/oracle.hpp"
#include "hgcode/point_enum.hpp"
#include "hgcode/selftest.hpp"

using namespace hgcode;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kGuard = 2, kDisagree = 3 };

struct Config {
  unsigned p = 2;
  unsigned e = 1;
  int m = 5;
  std::string modulus;
  std::string format = "plain";
  bool unguarded = false;
};

bool structured(const Config& c) { return c.format == "structured"; }

json count_json(Count v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Elem x : v) a.push_back(x.code);
  return a;
}

void header(const Config& c, const Field& f) {
  std::string mod;
  for (std::size_t i = 0; i < f.modulus().size(); ++i) mod += (i ? "," : "") + std::to_string(f.modulus()[i]);
  std::cout << "# field p=" << c.p << " e=" << c.e << " q=" << f.q() << " modulus=" << mod << " m=" << c.m << "\n";
}

std::optional<std::vector<unsigned>> parse_modulus(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<unsigned> out;
  for (const auto& tok : io::split(s, ',')) {
    try {
      out.push_back(static_cast<unsigned>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw io::ParseError("bad modulus coefficient '" + tok + "'");
    }
  }
  return out;
}

std::vector<Count> parse_indices(const std::string& s) {
  std::vector<Count> out;
  for (const auto& tok : io::split(s, ','))
    if (!tok.empty()) out.push_back(parse_count(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian polar space enumeration and line Hermitian Grassmann codes"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--p", cfg.p, "Characteristic")->capture_default_str();
  app.add_option("--e", cfg.e, "Subfield degree, q = p^e")->capture_default_str();
  app.add_option("--m", cfg.m, "Vector space dimension")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "Monic irreducible of degree 2e, coefficients low degree first");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "structured"}))->capture_default_str();
  app.add_flag("--unguarded", cfg.unguarded, "Lift the brute-force feasibility guards");

  auto* params = app.add_subcommand("params", "Code parameters N, K, d_min, mu_m, N_m");

  std::string vec_text, mat_text, idx_text, kind = "point", prefix_text;
  auto* rank_point = app.add_subcommand("rank-point", "Rank of a normalized isotropic vector");
  rank_point->add_option("--vector", vec_text, "Comma-separated encodings")->required();
  auto* unrank_point = app.add_subcommand("unrank-point", "Point of a given rank");
  unrank_point->add_option("--index", idx_text)->required();
  auto* rank_line = app.add_subcommand("rank-line", "Rank of an isotropic line in RREF");
  rank_line->add_option("--matrix", mat_text, "Two rows separated by ';'")->required();
  auto* unrank_line = app.add_subcommand("unrank-line", "Line of a given rank");
  unrank_line->add_option("--index", idx_text)->required();

  auto* count_prefix = app.add_subcommand("count-prefix", "theta or psi of a prefix");
  count_prefix->add_option("--kind", kind)->check(CLI::IsMember({"point", "line"}))->capture_default_str();
  count_prefix->add_option("--prefix", prefix_text, "Vector, or two rows separated by ';' (empty for the empty prefix)");

  std::string message_file, codeword_file, received_file, indices_text;
  auto* encode = app.add_subcommand("encode", "Codeword of a message");
  encode->add_option("--message-file", message_file)->required()->check(CLI::ExistingFile);
  auto* component = app.add_subcommand("component", "One codeword symbol");
  component->add_option("--message-file", message_file)->required()->check(CLI::ExistingFile);
  component->add_option("--index", idx_text, "0-based component (line rank)")->required();
  auto* decode = app.add_subcommand("decode", "Message of a codeword");
  decode->add_option("--codeword-file", codeword_file)->required()->check(CLI::ExistingFile);
  auto* correct = app.add_subcommand("correct", "Majority-vote correction over plane pencils (m >= 6)");
  correct->add_option("--received-file", received_file)->required()->check(CLI::ExistingFile);
  correct->add_option("--indices", indices_text, "Comma-separated 0-based components (default: all)");
  auto* gen_matrix = app.add_subcommand("gen-matrix", "Explicit generator matrix (guarded)");

  std::string level = "fast";
  auto* selftest = app.add_subcommand("selftest", "Oracle agreement suite");
  selftest->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Field f(cfg.p, cfg.e, parse_modulus(cfg.modulus));
    const PolarSpace ps(f, cfg.m);
    const auto guards = cfg.unguarded ? oracle::Guards::unguarded() : oracle::Guards{};
    const bool js = structured(cfg);
    header(cfg, f);

    if (*params) {
      const auto cp = code_params(f.q(), cfg.m);
      if (js)
        std::cout << json{{"N", count_json(cp.N)}, {"K", count_json(cp.K)}, {"d_min", count_json(cp.d_min)},
                          {"mu_m", count_json(cp.mu_m)}, {"N_m", count_json(cp.N_m)}}
                         .dump()
                  << "\n";
      else
        std::cout << "N=" << to_string(cp.N) << " K=" << to_string(cp.K) << " dmin=" << to_string(cp.d_min)
                  << " mu=" << to_string(cp.mu_m) << " Nm=" << to_string(cp.N_m) << "\n";
    } else if (*rank_point) {
      const Count r = PointEnumerator(ps).rank(io::parse_vector(f, vec_text));
      std::cout << (js ? json{{"rank", count_json(r)}}.dump() : to_string(r)) << "\n";
    } else if (*unrank_point) {
      const Vec x = PointEnumerator(ps).unrank(parse_count(idx_text));
      std::cout << (js ? json{{"vector", vec_json(x)}}.dump() : io::format_vector(x)) << "\n";
    } else if (*rank_line) {
      const Count r = LineEnumerator(ps).rank(io::parse_matrix(f, mat_text));
      std::cout << (js ? json{{"rank", count_json(r)}}.dump() : to_string(r)) << "\n";
    } else if (*unrank_line) {
      const LineRREF l = LineEnumerator(ps).unrank(parse_count(idx_text));
      std::cout << (js ? json{{"a", vec_json(l.a)}, {"b", vec_json(l.b)}}.dump() : io::format_matrix(l)) << "\n";
    } else if (*count_prefix) {
      Count v;
      if (kind == "point") {
        v = PointEnumerator(ps).theta(io::parse_vector(f, prefix_text));
      } else {
        LineRREF d = io::trim(prefix_text).empty() ? LineRREF{} : io::parse_matrix(f, prefix_text);
        v = LineEnumerator(ps).psi(LinePrefix{d.a, d.b});
      }
      std::cout << (js ? json{{"count", count_json(v)}}.dump() : to_string(v)) << "\n";
    } else if (*encode) {
      const LineCode code(ps);
      const Codeword c = code.encode(io::read_vector_file(f, message_file));
      if (js) {
        std::cout << json{{"codeword", vec_json(c)}}.dump() << "\n";
      } else {
        for (Elem x : c) std::cout << x.code << "\n";
      }
    } else if (*component) {
      const LineCode code(ps);
      const Elem x = code.eval_component(io::read_vector_file(f, message_file), parse_count(idx_text));
      std::cout << (js ? json{{"value", x.code}}.dump() : std::to_string(x.code)) << "\n";
    } else if (*decode) {
      const LineCode code(ps);
      const Message w = code.decode(io::read_vector_file(f, codeword_file));
      std::cout << (js ? json{{"message", vec_json(w)}}.dump() : io::format_vector(w)) << "\n";
    } else if (*correct) {
      if (cfg.m < 6) {
        std::cerr << "error: correct needs m >= 6\n";
        return kUsage;
      }
      const LineCode code(ps);
      const Codeword r = io::read_vector_file(f, received_file);
      std::vector<Count> idx = parse_indices(indices_text);
      if (indices_text.empty())
        for (std::size_t i = 0; i < code.length(); ++i) idx.push_back(Count(i));
      const auto vals = code.correct(r, idx);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (js)
          std::cout << json{{"index", count_json(idx[k])}, {"value", vals[k].code}}.dump() << "\n";
        else
          std::cout << to_string(idx[k]) << " " << vals[k].code << "\n";
      }
    } else if (*gen_matrix) {
      const auto g = oracle::generator_matrix(f, cfg.m, guards);
      for (std::size_t r = 0; r < g.rows; ++r) {
        Vec row(g.data.begin() + r * g.cols, g.data.begin() + (r + 1) * g.cols);
        std::cout << (js ? json{{"row", r}, {"entries", vec_json(row)}}.dump() : io::format_vector(row)) << "\n";
      }
    } else if (*selftest) {
      const auto reports = run_selftest(ps, level == "full" ? SelftestLevel::full : SelftestLevel::fast, guards);
      bool all = true;
      for (const auto& rep : reports) {
        all = all && rep.agree;
        if (js)
          std::cout << json{{"quantity", rep.quantity}, {"oracle", count_json(rep.oracle)},
                            {"fast", count_json(rep.fast)}, {"agree", rep.agree}, {"q", rep.q}, {"m", rep.m}}
                           .dump()
                    << "\n";
        else
          std::cout << rep.to_line() << "\n";
      }
      return all ? kOk : kDisagree;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const std::domain_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

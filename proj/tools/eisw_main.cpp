#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "eisw/json_io.hpp"
#include "eisw/numeric.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct Output {
  std::string out_path;   // empty = stdout
  std::string cache_dir;  // empty = no cache

  // cache key -> either reuse the cached artifact or compute and store it
  int emit(const std::string& key, const std::function<std::string()>& compute) const {
    std::string payload;
    fs::path cache_file;
    if (!cache_dir.empty()) {
      fs::create_directories(cache_dir);
      cache_file = fs::path(cache_dir) / (key + ".json");
      if (fs::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        payload = ss.str();
      }
    }
    if (payload.empty()) {
      payload = compute();
      if (!cache_file.empty()) {
        std::ofstream out(cache_file, std::ios::binary);
        out << payload;
      }
    }
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << payload;
    }
    return 0;
  }
};

void check_level_arg(long N) {
  if (N <= 4 || !eisw::is_valid_level(N))
    throw CLI::ValidationError("N must be odd, square-free and > 4");
}

void check_divisor_arg(long N, long m) {
  if (m <= 1 || m > N || N % m != 0) throw CLI::ValidationError("m must divide N, with m > 1");
}

json numeric_checks(long N, long m, double tol, long terms, int count,
                    std::mt19937_64& rng) {
  json out = json::array();
  for (int i = 0; i < count; ++i) {
    // random gamma in Gamma_0(N) with small entries
    long c = N * static_cast<long>(rng() % 4 + 1);
    long d = 0;
    do {
      d = static_cast<long>(rng() % (2 * static_cast<unsigned long>(N))) + 1;
    } while (std::gcd(c, d) != 1);
    auto e = eisw::xgcd(d, c);
    eisw::Mat22 gamma{e.x, -e.y, c, d};
    auto chk = eisw::verify_period(N, m, gamma, tol, terms);
    json j;
    j["name"] = "numeric_period_m" + std::to_string(m);
    j["pass"] = chk.pass;
    std::ostringstream detail;
    detail << "gamma=[" << gamma.a.get_str() << "," << gamma.b.get_str() << ","
           << gamma.c.get_str() << "," << gamma.d.get_str() << "] residual=" << chk.residual;
    j["detail"] = detail.str();
    out.push_back(j);
  }
  return out;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Eisenstein and winding elements of modular symbols for Gamma_0(N)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  double tol = 1e-6;
  long terms = 0;
  int jobs = 1;
  app.add_option("--out", output.out_path, "write the JSON artifact to this path");
  app.add_option("--cache", output.cache_dir, "cache directory for computed artifacts");
  app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  app.add_option("--terms", terms, "q-expansion truncation override (0 = automatic)");
  app.add_option("--jobs", jobs, "parallel workers for batch verification")->capture_default_str();

  // dedekind u v
  auto* cmd_dedekind = app.add_subcommand("dedekind", "Dedekind sum s(u, v)");
  long ded_u = 0, ded_v = 1;
  cmd_dedekind->add_option("u", ded_u)->required();
  cmd_dedekind->add_option("v", ded_v)->required();

  // p1 N
  auto* cmd_p1 = app.add_subcommand("p1", "list P^1(Z/NZ)");
  long p1_n = 0;
  cmd_p1->add_option("N", p1_n)->required();

  // cusps N
  auto* cmd_cusps = app.add_subcommand("cusps", "cusps of X_0(N) with ramification indices");
  long cusps_n = 0;
  cmd_cusps->add_option("N", cusps_n)->required();

  // divisor N m
  auto* cmd_divisor = app.add_subcommand("divisor", "divisor of the Eisenstein series E_m");
  long div_n = 0, div_m = 0;
  cmd_divisor->add_option("N", div_n)->required();
  cmd_divisor->add_option("m", div_m)->required();

  // period N m a b c d
  auto* cmd_period = app.add_subcommand("period", "period of E_m on a Gamma_0(N) matrix");
  long per_n = 0, per_m = 0;
  std::vector<std::string> per_entries;
  cmd_period->add_option("N", per_n)->required();
  cmd_period->add_option("m", per_m)->required();
  cmd_period->add_option("entries", per_entries, "matrix entries a b c d")->expected(4);

  // element N m [--verify]
  auto* cmd_element = app.add_subcommand("element", "Eisenstein element for E_m");
  long el_n = 0, el_m = 0;
  bool el_verify = false;
  cmd_element->add_option("N", el_n)->required();
  cmd_element->add_option("m", el_m)->required();
  cmd_element->add_flag("--verify", el_verify, "run the verification checks; exit 3 on failure");

  // winding N [--verify]
  auto* cmd_winding = app.add_subcommand("winding", "winding element e_N");
  long win_n = 0;
  bool win_verify = false;
  cmd_winding->add_option("N", win_n)->required();
  cmd_winding->add_flag("--verify", win_verify,
                        "check zero boundary and integrality of n e_N; exit 3 on failure");

  // verify N
  auto* cmd_verify = app.add_subcommand("verify", "all checks for every m | N");
  long ver_n = 0;
  cmd_verify->add_option("N", ver_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_dedekind) {
      if (ded_v <= 0 || std::gcd(((ded_u % ded_v) + ded_v) % ded_v, ded_v) != 1) {
        std::cerr << "error: need v > 0 and gcd(u, v) = 1\n";
        return kExitUsage;
      }
      std::cout << eisw::rat_to_string(eisw::dedekind_sum_fast(ded_u, ded_v)) << "\n";
      return 0;
    }
    if (*cmd_p1) {
      check_level_arg(p1_n);
      return output.emit("p1_" + std::to_string(p1_n) + "_v" + kVersion,
                         [&] { return eisw::dump_deterministic(eisw::p1_to_json(p1_n)); });
    }
    if (*cmd_cusps) {
      check_level_arg(cusps_n);
      return output.emit("cusps_" + std::to_string(cusps_n) + "_v" + kVersion,
                         [&] { return eisw::dump_deterministic(eisw::cusps_to_json(cusps_n)); });
    }
    if (*cmd_divisor) {
      check_level_arg(div_n);
      check_divisor_arg(div_n, div_m);
      return output.emit(
          "divisor_" + std::to_string(div_n) + "_" + std::to_string(div_m) + "_v" + kVersion,
          [&] { return eisw::dump_deterministic(eisw::divisor_to_json(div_n, div_m)); });
    }
    if (*cmd_period) {
      check_level_arg(per_n);
      check_divisor_arg(per_n, per_m);
      eisw::Mat22 gamma{eisw::Int(per_entries[0]), eisw::Int(per_entries[1]),
                        eisw::Int(per_entries[2]), eisw::Int(per_entries[3])};
      std::cout << eisw::dump_deterministic(eisw::period_to_json(per_n, per_m, gamma));
      return 0;
    }
    if (*cmd_element) {
      check_level_arg(el_n);
      check_divisor_arg(el_n, el_m);
      if (el_verify) {
        auto report = eisw::verify_eisenstein(el_n, el_m);
        if (!report.all_pass()) {
          std::cerr << eisw::dump_deterministic(eisw::report_to_json(report));
          return kExitVerifyFailed;
        }
      }
      return output.emit(
          "element_" + std::to_string(el_n) + "_" + std::to_string(el_m) + "_v" + kVersion,
          [&] { return eisw::dump_deterministic(eisw::element_to_json(el_n, el_m)); });
    }
    if (*cmd_winding) {
      check_level_arg(win_n);
      if (win_verify) {
        auto j = eisw::winding_to_json(win_n);
        if (j.at("boundary") != "0" || !j.at("n_e_integral").get<bool>()) {
          std::cerr << eisw::dump_deterministic(j);
          return kExitVerifyFailed;
        }
      }
      return output.emit("winding_" + std::to_string(win_n) + "_v" + kVersion,
                         [&] { return eisw::dump_deterministic(eisw::winding_to_json(win_n)); });
    }
    if (*cmd_verify) {
      check_level_arg(ver_n);
      json j;
      j["N"] = ver_n;
      json reports = json::array();
      bool all = true;

      std::vector<long> ms;
      for (long m : eisw::divisors(ver_n))
        if (m > 1) ms.push_back(m);
      std::vector<json> partial(ms.size());
      // batch verification is pure per divisor; split across workers
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      int workers = std::max(1, std::min<int>(jobs, static_cast<int>(ms.size())));
      auto body = [&] {
        for (size_t i = next.fetch_add(1); i < ms.size(); i = next.fetch_add(1))
          partial[i] = eisw::report_to_json(eisw::verify_eisenstein(ver_n, ms[i]));
      };
      if (workers == 1) {
        body();
      } else {
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
      }
      for (const auto& p : partial) {
        all = all && p.at("pass").get<bool>();
        reports.push_back(p);
      }
      j["reports"] = reports;

      std::mt19937_64 rng(20240801);
      json numeric = json::array();
      for (long m : ms) {
        json chk = numeric_checks(ver_n, m, tol, terms, 4, rng);
        for (const auto& c : chk) {
          all = all && c.at("pass").get<bool>();
          numeric.push_back(c);
        }
      }
      j["numeric_periods"] = numeric;
      j["pass"] = all;
      std::cout << eisw::dump_deterministic(j);
      return all ? 0 : kExitVerifyFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

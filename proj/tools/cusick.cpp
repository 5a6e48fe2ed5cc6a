// Command-line front end. Exit status: 0 when every hard assertion held,
// 2 when one failed, 1 on usage or runtime errors.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cusick/bitword.hpp"
#include "cusick/bounds.hpp"
#include "cusick/delta.hpp"
#include "cusick/fourier.hpp"
#include "cusick/harness.hpp"
#include "cusick/oracle.hpp"
#include "cusick/spectrum.hpp"

namespace {

using namespace cusick;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

std::string decimal(const Dyadic& v) { return v.to_decimal(kDecimalDigits); }

std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.15g, %.15g)", z.real(), z.imag());
  return buf;
}

RationalAngle parse_angle(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("angle must be J/M: " + text);
  std::size_t used = 0;
  const long long j = std::stoll(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("angle must be J/M: " + text);
  const std::string den = text.substr(slash + 1);
  const long long m = std::stoll(den, &used);
  if (used != den.size()) throw std::invalid_argument("angle must be J/M: " + text);
  return {j, m};
}

void print_report(const TheoremReport& r) {
  std::cout << "epsilon=" << r.params.epsilon << " N=" << r.params.N << " m=" << r.params.m
            << " M=" << r.params.M << " C=" << r.params.C << '\n'
            << "t_bits=" << r.t.bit_length() << " blocks=" << r.blocks << '\n'
            << "c_t=" << r.pair.c_t << " (" << decimal(r.pair.c_t) << ")\n"
            << "c_t_prime=" << r.pair.c_t_prime << " (" << decimal(r.pair.c_t_prime) << ")\n"
            << "pair_sum=" << decimal(r.pair.sum) << '\n'
            << "residue_bound=" << decimal(r.residue_bound) << '\n'
            << "floor_15_16=" << (r.floor_holds ? "holds" : "VIOLATED") << '\n';
  if (!r.hypothesis_met) {
    std::cout << "hypothesis not met (blocks < C)\n";
  } else {
    std::cout << "pair_sum > 1 - epsilon: " << (*r.inequality_holds ? "holds" : "VIOLATED")
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact digit-sum correlation densities and Cusick-type checks"};
  app.require_subcommand(1);

  std::string t_text;
  const auto add_t = [&](CLI::App* sub) {
    sub->add_option("T", t_text, "t, decimal or 0b-prefixed binary")->required();
  };

  auto* phi_cmd = app.add_subcommand("phi", "print phi(k, t) for every k in the support");
  add_t(phi_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "print delta(k, t) around the origin");
  add_t(delta_cmd);
  std::int64_t k_window = -1;
  delta_cmd->add_option("--k-window", k_window, "print k in [-W, W] (default: bit length + 1)");

  auto* ct_cmd = app.add_subcommand("ct", "print c_t exactly and as a decimal");
  add_t(ct_cmd);

  auto* pair_cmd = app.add_subcommand("pair", "print c_t, c_t' and their sum");
  add_t(pair_cmd);

  auto* omega_cmd = app.add_subcommand("omega", "evaluate omega_t(J/M)");
  add_t(omega_cmd);
  std::string theta_text;
  omega_cmd->add_option("--theta", theta_text, "angle J/M")->required();

  auto* psi_cmd = app.add_subcommand("psi", "phi(., t) mass per residue class mod M");
  add_t(psi_cmd);
  std::int64_t modulus = 0;
  psi_cmd->add_option("-m", modulus, "modulus")->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "count blocks of consecutive 1s");
  add_t(blocks_cmd);

  auto* patterns_cmd = app.add_subcommand("patterns", "positions of 100/101 digit triples");
  add_t(patterns_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "parameter chain for a given epsilon");
  double epsilon = 0.0;
  bound_cmd->add_option("--epsilon", epsilon, "epsilon in (0, 1)")->required();

  auto* verify_cmd = app.add_subcommand("verify-theorem", "check c_t + c_t' > 1 - epsilon");
  verify_cmd->add_option("--epsilon", epsilon, "epsilon in (0, 1)")->required();
  auto* verify_t = verify_cmd->add_option("--t", t_text, "t to check");
  bool construct = false;
  auto* verify_construct = verify_cmd->add_flag(
      "--construct", construct, "use t = sum of 4^i for i < C, which has exactly C blocks");
  verify_t->excludes(verify_construct);

  auto* oracle_cmd = app.add_subcommand("oracle", "count s(n+t) - s(n) over n < N");
  add_t(oracle_cmd);
  std::uint64_t limit = 0;
  unsigned jobs = 1;
  oracle_cmd->add_option("--limit", limit, "N")->required();
  oracle_cmd->add_option("--jobs", jobs, "threads (0 = all cores)");

  auto* sweep_cmd = app.add_subcommand("sweep", "records for every t in [A, B]");
  std::string from_text;
  std::string to_text;
  std::string checks_text = "all";
  std::string out_path;
  std::string checkpoint_path;
  std::uint64_t stop_after = 0;
  sweep_cmd->add_option("--from", from_text, "first t")->required();
  sweep_cmd->add_option("--to", to_text, "last t")->required();
  sweep_cmd->add_option("--checks", checks_text,
                        "all, or a list of floor,mass,symmetry,cusick,pair,sufficient");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  sweep_cmd->add_option("--out", out_path, "JSON-lines output file")->required();
  sweep_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file for resume");
  sweep_cmd->add_option("--stop-after-blocks", stop_after,
                        "exit after this many blocks, as if interrupted");

  auto* csv_cmd = app.add_subcommand("export-csv", "decimal CSV from sweep output");
  std::string csv_in;
  std::string csv_out;
  csv_cmd->add_option("IN", csv_in, "JSON-lines sweep output")->required();
  csv_cmd->add_option("OUT", csv_out, "CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*phi_cmd) {
      const Spectrum s = phi(BitWord::parse(t_text));
      for (const auto& [k, v] : s.entries()) {
        std::cout << k << '\t' << v << '\t' << decimal(v) << '\n';
      }
      return kOk;
    }
    if (*delta_cmd) {
      const BitWord t = BitWord::parse(t_text);
      const TailedDistribution d = delta_dist(t);
      const std::int64_t w =
          k_window >= 0 ? k_window : static_cast<std::int64_t>(t.bit_length()) + 1;
      for (std::int64_t k = w; k >= -w; --k) {
        const Dyadic v = d.at(k);
        std::cout << k << '\t' << v << '\t' << decimal(v) << '\n';
      }
      std::cout << "tail: delta(k) = " << d.tail_value() << " * 2^(k - " << d.tail_start()
                << ") for k <= " << d.tail_start() << '\n';
      return kOk;
    }
    if (*ct_cmd) {
      const Dyadic v = c(BitWord::parse(t_text));
      std::cout << v << '\n' << decimal(v) << '\n';
      return kOk;
    }
    if (*pair_cmd) {
      const BitWord t = BitWord::parse(t_text);
      const PairSum p = pair_sum(t);
      std::cout << "t=" << t << " t_prime=" << reflect(t) << '\n'
                << "c_t=" << p.c_t << '\t' << decimal(p.c_t) << '\n'
                << "c_t_prime=" << p.c_t_prime << '\t' << decimal(p.c_t_prime) << '\n'
                << "pair_sum=" << p.sum << '\t' << decimal(p.sum) << '\n';
      const bool floor_ok = p.sum >= Dyadic(15).scale_pow2(-4);
      if (!floor_ok) std::cout << "pair_sum >= 15/16 VIOLATED\n";
      return floor_ok ? kOk : kViolation;
    }
    if (*omega_cmd) {
      const BitWord t = BitWord::parse(t_text);
      const Complex z = omega_matrix(t, parse_angle(theta_text));
      std::cout << complex_text(z) << '\n';
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.15g", std::abs(z));
      std::cout << "abs " << buf << '\n';
      return kOk;
    }
    if (*psi_cmd) {
      const BitWord t = BitWord::parse(t_text);
      const ResidueMass psi = psi_direct(t, modulus);
      for (std::int64_t b = 0; b < modulus; ++b) {
        std::cout << b << '\t' << psi.exact[b] << '\t' << decimal(psi.exact[b]) << '\n';
      }
      return kOk;
    }
    if (*blocks_cmd) {
      std::cout << count_blocks(BitWord::parse(t_text)) << '\n';
      return kOk;
    }
    if (*patterns_cmd) {
      const auto positions = pattern_positions(BitWord::parse(t_text));
      for (std::size_t i = 0; i < positions.size(); ++i) {
        std::cout << (i == 0 ? "" : " ") << positions[i];
      }
      std::cout << '\n';
      return kOk;
    }
    if (*bound_cmd) {
      const BoundParams p = params_for(epsilon);
      const auto terms = p.error_terms();
      std::printf("N=%" PRId64 "\nm=%" PRId64 "\nM=%" PRId64 "\nC=%" PRId64 "\n", p.N, p.m, p.M,
                  p.C);
      const char* names[3] = {"2^(-N-2)", "2N/m", "m*exp(-M/(2m^2))"};
      for (int i = 0; i < 3; ++i) {
        std::printf("%s=%.12g margin=%.12g\n", names[i], terms[i], epsilon / 3.0 - terms[i]);
      }
      std::printf("lower_bound=%.12g\n", theorem_lower_bound(p));
      return kOk;
    }
    if (*verify_cmd) {
      if (verify_t->count() == 0 && !construct) {
        std::cerr << "verify-theorem: one of --t or --construct is required\n";
        return kUsage;
      }
      const BitWord t =
          construct ? BitWord::alternating(static_cast<std::size_t>(params_for(epsilon).C))
                    : BitWord::parse(t_text);
      const TheoremReport r = verify_main_theorem(t, epsilon);
      print_report(r);
      return r.hard_violation() ? kViolation : kOk;
    }
    if (*oracle_cmd) {
      const BitWord t = BitWord::parse(t_text);
      const Histogram h = histogram(t, limit, effective_jobs(jobs));
      for (const auto& [k, n] : h.counts) std::cout << k << '\t' << n << '\n';
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.12f",
                    static_cast<double>(h.nonnegative()) / static_cast<double>(h.limit));
      std::cout << "fraction_nonnegative " << buf << '\n';
      return kOk;
    }
    if (*sweep_cmd) {
      SweepOptions options;
      options.from = BitWord::parse(from_text);
      options.to = BitWord::parse(to_text);
      options.checks = CheckSet::parse(checks_text);
      options.jobs = jobs;
      options.out = out_path;
      if (!checkpoint_path.empty()) options.checkpoint = checkpoint_path;
      if (stop_after > 0) options.stop_after_blocks = stop_after;
      const SweepSummary summary = sweep(options);
      std::cout << summary.to_json() << '\n';
      return summary.hard_failures() > 0 ? kViolation : kOk;
    }
    if (*csv_cmd) {
      std::ifstream in(csv_in, std::ios::binary);
      if (!in) throw std::runtime_error("cannot read " + csv_in);
      std::ofstream out(csv_out, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + csv_out);
      out << csv_header() << '\n';
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) out << to_csv_line(parse_record(line)) << '\n';
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

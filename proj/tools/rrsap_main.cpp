// rrsap: query and verify maximum arithmetic-progression lengths in reduced
// residue systems. See README.md for the command reference.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrsap/rrsap.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 5;

constexpr std::int64_t kTableMaxRows = 500;

struct options {
  std::string format = "text";
  bool quiet = false;
  int threads = 0;
  std::int64_t solver_limit = rrsap::limits::solver_n;
};

std::string witness_text(const rrsap::ap_witness& w) {
  std::ostringstream out;
  out << "first=" << w.first << " difference=" << w.difference << " length=" << w.length;
  return out.str();
}

rrsap::output_record make_record(const rrsap::factorization& fact, bool with_phi,
                                 std::optional<rrsap::ap_witness> exact_witness,
                                 std::optional<rrsap::ap_witness> shown_witness) {
  rrsap::output_record r;
  r.n = fact.n;
  r.lower = rrsap::lower_bound(fact);
  r.upper = rrsap::upper_bound(fact);
  if (exact_witness) r.f = exact_witness->length;
  if (shown_witness) r.witness = shown_witness;
  if (with_phi) r.phi = rrsap::totient(fact);
  return r;
}

void emit_machine_record(const rrsap::output_record& r, const options& opt, bool& header_done) {
  if (opt.format == "csv") {
    if (!header_done) {
      std::cout << rrsap::csv_header << '\n';
      header_done = true;
    }
    rrsap::output_record row = r;
    row.phi.reset();  // the csv header has no phi column
    std::cout << rrsap::to_csv(row) << '\n';
  } else {
    std::cout << rrsap::to_jsonl(r) << '\n';
  }
}

int cmd_f(std::int64_t n, const options& opt) {
  if (n >= 2 && n > opt.solver_limit)
    throw rrsap::resource_error("f: n = " + std::to_string(n) + " exceeds the solver limit " +
                                std::to_string(opt.solver_limit));
  const rrsap::factorization fact = rrsap::factorize(n);
  const rrsap::residue_system rs(fact);
  const rrsap::ap_witness w = rrsap::exact_f(rs, fact);
  if (opt.format != "text") {
    bool header_done = false;
    emit_machine_record(make_record(fact, opt.format == "jsonl", w, w), opt, header_done);
  } else if (opt.quiet) {
    std::cout << w.length << '\n';
  } else {
    std::cout << "f(" << n << ") = " << w.length << '\n';
    std::cout << "witness: " << witness_text(w) << '\n';
  }
  return kExitOk;
}

int cmd_bounds(std::int64_t n, bool with_exact, const options& opt) {
  if (n >= 2 && with_exact && n > opt.solver_limit)
    throw rrsap::resource_error("bounds: n = " + std::to_string(n) +
                                " exceeds the solver limit " + std::to_string(opt.solver_limit));
  const rrsap::factorization fact = rrsap::factorize(n);
  rrsap::bounds_report r;
  if (with_exact) {
    const rrsap::residue_system rs(fact);
    r = rrsap::compute_bounds(rs, fact, true);
  } else {
    r = rrsap::compute_bounds(fact);
  }
  if (opt.format != "text") {
    bool header_done = false;
    emit_machine_record(make_record(fact, opt.format == "jsonl", r.witness, r.witness), opt,
                        header_done);
  } else if (opt.quiet) {
    std::cout << r.lower;
    if (r.exact) std::cout << ' ' << *r.exact;
    std::cout << ' ' << r.upper << '\n';
  } else {
    std::cout << "n=" << r.n << " largest_prime=" << r.largest_prime
              << " radical=" << r.radical << " lower=" << r.lower << " upper=" << r.upper;
    if (r.exact) std::cout << " exact=" << *r.exact;
    std::cout << '\n';
    if (r.witness) std::cout << "witness: " << witness_text(*r.witness) << '\n';
  }
  return kExitOk;
}

int cmd_witness(std::int64_t n, const options& opt) {
  const rrsap::factorization fact = rrsap::factorize(n);
  const rrsap::ap_witness w = rrsap::witness_general(fact);
  if (opt.format != "text") {
    bool header_done = false;
    emit_machine_record(make_record(fact, opt.format == "jsonl", std::nullopt, w), opt,
                        header_done);
  } else if (opt.quiet) {
    std::cout << w.first << ' ' << w.difference << ' ' << w.length << '\n';
  } else {
    std::cout << "witness for n=" << n << ": " << witness_text(w) << '\n';
    std::cout << "certifies f(" << n << ") >= " << w.length << '\n';
  }
  return kExitOk;
}

std::string listing_text(const rrsap::residue_system& rs, std::int64_t list_limit) {
  std::ostringstream out;
  out << '{';
  const auto& elems = rs.elements();
  if (rs.modulus() <= list_limit) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) out << ", ";
      out << elems[i];
    }
    out << '}';
  } else {
    const std::size_t shown = std::min<std::size_t>(elems.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      if (i) out << ", ";
      out << elems[i];
    }
    out << ", ...} (" << elems.size() << " elements)";
  }
  return out.str();
}

int cmd_table(std::int64_t from, std::int64_t to, std::int64_t list_limit, const options& opt) {
  if (from < 2 || from > to)
    throw std::domain_error("table: need 2 <= from <= to, got [" + std::to_string(from) + ", " +
                            std::to_string(to) + "]");
  if (to - from + 1 > kTableMaxRows)
    throw std::domain_error("table: range of " + std::to_string(to - from + 1) +
                            " rows exceeds the listing limit of " + std::to_string(kTableMaxRows) +
                            "; use 'sweep' for large ranges");
  if (to > opt.solver_limit)
    throw rrsap::resource_error("table: upper end exceeds the solver limit " +
                                std::to_string(opt.solver_limit));

  std::vector<std::string> listings;
  std::vector<std::int64_t> values;
  std::size_t width = 4;  // "A(n)"
  for (std::int64_t n = from; n <= to; ++n) {
    const rrsap::factorization fact = rrsap::factorize(n);
    const rrsap::residue_system rs(fact);
    listings.push_back(listing_text(rs, list_limit));
    values.push_back(rrsap::exact_f(rs, fact).length);
    width = std::max(width, listings.back().size());
  }

  const std::size_t nwidth = std::max<std::size_t>(std::to_string(to).size(), 1);
  std::cout << std::string(nwidth - 1, ' ') << "n  ";
  std::cout << "A(n)" << std::string(width - 4, ' ') << "  f(n)\n";
  for (std::int64_t n = from; n <= to; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - from);
    const std::string ns = std::to_string(n);
    std::cout << std::string(nwidth - ns.size(), ' ') << ns << "  ";
    std::cout << listings[i] << std::string(width - listings[i].size(), ' ');
    std::cout << "  " << values[i] << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::int64_t max, const options& opt) {
  const rrsap::range_verification v = rrsap::verify_range(2, max, opt.threads, opt.solver_limit);
  if (opt.quiet) {
    std::cout << v.violations.size() << '\n';
  } else {
    std::cout << "verified n in [2, " << max << "]: checked=" << v.checked
              << " violations=" << v.violations.size() << " lower_tight=" << v.lower_tight
              << " upper_tight=" << v.upper_tight << '\n';
  }
  if (!v.violations.empty()) {
    std::cerr << "bound violations at:";
    for (std::int64_t n : v.violations) std::cerr << ' ' << n;
    std::cerr << '\n';
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_threshold(std::int64_t k, bool empirical, const options& opt) {
  const rrsap::threshold_record rec =
      empirical ? rrsap::minimal_threshold(k, opt.threads, opt.solver_limit)
                : rrsap::guaranteed_threshold(k);
  if (opt.quiet) {
    std::cout << (empirical ? std::to_string(*rec.minimal) : rec.guaranteed.str()) << '\n';
    return kExitOk;
  }
  std::cout << "k=" << k << " P_" << 2 * k << "=" << rec.primorial.str() << " n_" << k << "="
            << rec.guaranteed.str() << '\n';
  if (empirical) {
    std::cout << "minimal=" << *rec.minimal << " last_failing="
              << (rec.last_failing ? std::to_string(*rec.last_failing) : std::string("none"))
              << " (empirical extension, exhaustive scan up to n_" << k << ")\n";
  }
  return kExitOk;
}

int cmd_sweep(std::int64_t from, std::int64_t to, const std::string& cache_flag,
              const options& opt) {
  if (from < 2 || from > to)
    throw std::domain_error("sweep: need 2 <= from <= to, got [" + std::to_string(from) + ", " +
                            std::to_string(to) + "]");
  if (to > opt.solver_limit)
    throw rrsap::resource_error("sweep: upper end " + std::to_string(to) +
                                " exceeds the solver limit " + std::to_string(opt.solver_limit));

  std::string cache_path = cache_flag;
  if (cache_path.empty())
    if (const char* env = std::getenv("RRSAP_CACHE")) cache_path = env;
  rrsap::result_cache cache(cache_path);

  const rrsap::spf_sieve sieve(to);

  // Compute a block in parallel, then emit it in ascending order, so output
  // order never depends on scheduling and memory stays bounded on big sweeps.
  constexpr std::int64_t block = 1 << 16;
  constexpr std::int64_t chunk = 256;
  bool header_done = false;
  for (std::int64_t lo = from; lo <= to; lo += block) {
    const std::int64_t hi = std::min(to, lo + block - 1);
    std::vector<std::optional<rrsap::ap_witness>> results(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
      if (const rrsap::ap_witness* w = cache.lookup(n))
        results[static_cast<std::size_t>(n - lo)] = *w;

    rrsap::parallel_chunks(lo, hi, chunk, opt.threads,
                           [&](std::int64_t, std::int64_t clo, std::int64_t chi) {
                             for (std::int64_t n = clo; n <= chi; ++n) {
                               auto& slot = results[static_cast<std::size_t>(n - lo)];
                               if (slot) continue;
                               const rrsap::factorization fact = sieve.factorize(n);
                               const rrsap::residue_system rs(fact);
                               slot = rrsap::exact_f(rs, fact);
                             }
                           });

    for (std::int64_t n = lo; n <= hi; ++n) {
      const rrsap::ap_witness& w = *results[static_cast<std::size_t>(n - lo)];
      const rrsap::output_record r = make_record(sieve.factorize(n), opt.format == "jsonl", w, w);
      if (opt.format == "text") {
        std::cout << "n=" << r.n << " f=" << *r.f << " lower=" << r.lower << " upper=" << r.upper
                  << " witness=(" << w.first << ',' << w.difference << ',' << w.length << ")\n";
      } else {
        emit_machine_record(r, opt, header_done);
      }
      cache.store(w);
    }
  }

  if (cache.enabled() && !cache.save() && !opt.quiet)
    std::cerr << "warning: could not write cache file '" << cache.path()
              << "'; results were not cached\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum arithmetic-progression lengths in reduced residue systems"};
  app.require_subcommand(1);
  app.fallthrough();

  options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}))
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "minimal output, suppress warnings");
  app.add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  app.add_option("--solver-limit", opt.solver_limit, "largest n the exact solver accepts")
      ->capture_default_str();

  std::int64_t arg_n = 0, arg_from = 0, arg_to = 0, arg_k = 0, arg_max = 0;
  std::int64_t list_limit = 128;
  bool with_exact = false, empirical = false;
  std::string cache_flag;

  CLI::App* c_f = app.add_subcommand("f", "exact f(n) with a maximal witness");
  c_f->add_option("n", arg_n, "modulus")->required();

  CLI::App* c_bounds = app.add_subcommand("bounds", "closed-form bounds on f(n)");
  c_bounds->add_option("n", arg_n, "modulus")->required();
  c_bounds->add_flag("--exact", with_exact, "also compute f(n) exactly");

  CLI::App* c_witness = app.add_subcommand("witness", "constructive lower-bound witness");
  c_witness->add_option("n", arg_n, "modulus")->required();

  CLI::App* c_table = app.add_subcommand("table", "n, A(n), f(n) rows for a small range");
  c_table->add_option("from", arg_from, "first n")->required();
  c_table->add_option("to", arg_to, "last n")->required();
  c_table->add_option("--list-limit", list_limit, "largest n whose A(n) is listed in full")
      ->capture_default_str();

  CLI::App* c_verify = app.add_subcommand("verify", "check lower <= f(n) <= upper on [2, max]");
  c_verify->add_option("--max", arg_max, "upper end of the range")->required();

  CLI::App* c_threshold = app.add_subcommand("threshold", "progression-length threshold for k");
  c_threshold->add_option("k", arg_k, "progression length")->required();
  c_threshold->add_flag("--empirical", empirical, "also scan for the minimal threshold");

  CLI::App* c_sweep = app.add_subcommand("sweep", "stream per-n records over a range");
  c_sweep->add_option("from", arg_from, "first n")->required();
  c_sweep->add_option("to", arg_to, "last n")->required();
  c_sweep->add_option("--cache", cache_flag, "result cache path (default: $RRSAP_CACHE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_f->parsed()) return cmd_f(arg_n, opt);
    if (c_bounds->parsed()) return cmd_bounds(arg_n, with_exact, opt);
    if (c_witness->parsed()) return cmd_witness(arg_n, opt);
    if (c_table->parsed()) return cmd_table(arg_from, arg_to, list_limit, opt);
    if (c_verify->parsed()) return cmd_verify(arg_max, opt);
    if (c_threshold->parsed()) return cmd_threshold(arg_k, empirical, opt);
    if (c_sweep->parsed()) return cmd_sweep(arg_from, arg_to, cache_flag, opt);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const rrsap::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const rrsap::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

// Batch CLI over the vilenkin library: every subcommand parses a config,
// runs one library operation, and emits a deterministic JSON (or CSV)
// report. Exit status: 0 ok, 1 violation found, 2 bad config.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vilenkin/dimensions.hpp"
#include "vilenkin/heisenberg.hpp"

using json = nlohmann::ordered_json;
using namespace vilenkin;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json phase_json(const Phase& ph) {
  return json{{"num", ph.numerator()}, {"p", ph.p()}, {"exp", ph.denom_exponent()}};
}

json cyclo_json(const Cyclo& z) {
  json terms = json::array();
  for (const auto& [q, c] : z.terms())
    terms.push_back(json{{"exponent", rat_to_string(q)}, {"coeff", rat_to_string(c)}});
  return terms;
}

void require_prime(long long p) {
  if (p < 2 || !is_prime(p))
    throw ConfigError("p must be prime >= 2, got " + std::to_string(p));
}

void require_grid(long long p, int r) {
  if (r < 0) throw ConfigError("level must be >= 0");
  long long size = 1;
  for (int i = 0; i < r; ++i) {
    size *= p;
    if (size > 1000000) throw ConfigError("p^r exceeds the guarded bound 10^6");
  }
}

// Flattens a {result} object into key,value CSV lines; arrays of uniform
// objects become real CSV tables.
void write_csv(std::ostream& os, const json& result) {
  for (const auto& [key, value] : result.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << "\n";
      const auto& first = value.front();
      bool head = true;
      for (const auto& [col, _] : first.items()) {
        os << (head ? "" : ",") << col;
        head = false;
      }
      os << "\n";
      for (const auto& row : value) {
        bool lead = true;
        for (const auto& [_, cell] : row.items()) {
          os << (lead ? "" : ",");
          lead = false;
          if (cell.is_string())
            os << cell.get<std::string>();
          else
            os << cell.dump();
        }
        os << "\n";
      }
    } else if (value.is_string()) {
      os << key << "," << value.get<std::string>() << "\n";
    } else {
      os << key << "," << value.dump() << "\n";
    }
  }
}

struct Emitter {
  std::string command;
  json config = json::object();
  std::string format = "json";
  std::string out_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(const json& result, const std::string& status) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::ostringstream os;
    if (format == "csv") {
      os << "command," << command << "\n";
      write_csv(os, result);
      os << "status," << status << "\n";
      os << "elapsed_ms," << elapsed << "\n";
    } else {
      json doc;
      doc["command"] = command;
      doc["config"] = config;
      doc["result"] = result;
      doc["status"] = status;
      doc["elapsed_ms"] = elapsed;
      os << doc.dump(2) << "\n";
    }
    if (out_path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_path);
      if (!f) throw ConfigError("cannot open output file " + out_path);
      f << os.str();
    }
    return status == "ok" ? 0 : 1;
  }
};

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand payloads

json run_decompose_indicator(long long p, int r, long long x) {
  require_prime(p);
  require_grid(p, r);
  if (r < 1) throw ConfigError("r must be >= 1");
  if (checked_pow(p, r) > 4096)
    throw ConfigError("p^r exceeds the exact-reconstruction bound 4096");
  const Coset coset(p, r, x);
  const auto coefs = indicator_coefficients(coset);
  json rows = json::array();
  for (size_t k = 0; k < coefs.size(); ++k) {
    const CharIndex idx = to_char_index(p, static_cast<MonnaIndex>(k));
    const Cyclo& c = coefs.at_monna(static_cast<MonnaIndex>(k));
    const auto& term = *c.terms().begin();
    rows.push_back(json{{"m", idx.m},
                        {"n", idx.n},
                        {"monna", k},
                        {"coeff", rat_to_string(term.second)},
                        {"phase_exponent", rat_to_string(term.first)}});
  }
  // Exact reconstruction check through integer-weighted root sums.
  const long long n = checked_pow(p, r);
  bool exact = true;
  for (long long z = 0; z < n && exact; ++z) {
    RootSum acc(p, r);
    for (long long k = 0; k < n; ++k) {
      const long long rev = static_cast<long long>(
          digit_reverse(p, static_cast<std::uint64_t>(k), r));
      acc.add(rev * (z - coset.representative), 1);
    }
    exact = acc.equals(Rat(z == coset.representative ? n : 0));
  }
  json result;
  result["coefficients"] = rows;
  result["reconstruction_error"] = exact ? "0" : "nonzero";
  result["reconstruction_exact"] = exact;
  return result;
}

json run_heis_decompose(long long p, int d, int r, const std::string& vx,
                        const std::string& vy, long long vz) {
  require_prime(p);
  if (d < 1 || d > 2) throw ConfigError("d must be 1 or 2");
  if (r < 1 || r > 2) throw ConfigError("r must be 1 or 2");
  require_grid(p, r * (2 * d + 1));
  const auto xs = parse_ll_list(vx), ys = parse_ll_list(vy);
  if (static_cast<int>(xs.size()) != d || static_cast<int>(ys.size()) != d)
    throw ConfigError("vx and vy must list d coordinates");
  const auto v = HeisElement::from_values(p, d, 2 * r, xs, ys, vz);
  const auto terms = k0_decomposition(v, r);
  json rows = json::array();
  for (const auto& t : terms)
    rows.push_back(json{{"zeta", t.zeta.label()},
                        {"dim", t.zeta.dim()},
                        {"row", t.row},
                        {"col", t.col},
                        {"scale", rat_to_string(t.coeff.scale)},
                        {"phase", phase_json(t.coeff.phase)}});
  json result;
  result["terms"] = rows;
  result["term_count"] = terms.size();
  result["reconstruction_error"] = fmt_double(k0_reconstruction_max_error(v, r, terms));
  return result;
}

json run_sigma_table(long long p, int m, std::uint64_t max_n, bool& violation) {
  require_prime(p);
  if (m < 0 || m > 6) throw ConfigError("m must lie in [0, 6]");
  if (max_n > 1000000) throw ConfigError("max-n exceeds the guarded bound 10^6");
  const MonnaIndex pm = static_cast<MonnaIndex>(checked_pow(p, m));
  json rows = json::array();
  for (std::uint64_t n = 0; n < max_n; ++n) {
    const std::uint64_t closed = sigma_pm_closed(p, m, n);
    const std::uint64_t brute = sigma(p, pm, n);
    if (closed != brute) violation = true;
    rows.push_back(json{
        {"n", n}, {"sigma_closed", closed}, {"sigma_brute", brute},
        {"equal", closed == brute}});
  }
  json result;
  result["rows"] = rows;
  result["all_equal"] = !violation;
  return result;
}

json run_transform_bench(long long p, int r, int trials, unsigned seed,
                         double tol, bool& violation) {
  require_prime(p);
  require_grid(p, r);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const long long n = checked_pow(p, r);
  auto random_function = [&] {
    LevelFunction<CD> f(p, r);
    for (size_t x = 0; x < f.size(); ++x) f[x] = CD{dist(rng), dist(rng)};
    return f;
  };
  // Equality before timing.
  double worst = 0.0;
  const int check_trials = n > 4096 ? 1 : trials;
  for (int t = 0; t < check_trials; ++t) {
    const auto f = random_function();
    const auto cf = analyze_fast(f);
    const auto cn = analyze_naive(f);
    for (size_t k = 0; k < cf.size(); ++k)
      worst = std::max(worst, std::abs(cf.at_monna(k) - cn.at_monna(k)));
  }
  if (worst > tol) violation = true;

  const auto f = random_function();
  const auto t0 = std::chrono::steady_clock::now();
  auto cf = analyze_fast(f);
  const auto t1 = std::chrono::steady_clock::now();
  auto cn = analyze_naive(f);
  const auto t2 = std::chrono::steady_clock::now();
  json result;
  result["points"] = n;
  result["checked_inputs"] = check_trials;
  result["max_deviation"] = fmt_double(worst);
  result["fast_ms"] =
      fmt_double(std::chrono::duration<double, std::milli>(t1 - t0).count());
  result["naive_ms"] =
      fmt_double(std::chrono::duration<double, std::milli>(t2 - t1).count());
  (void)cf;
  (void)cn;
  return result;
}

json run_rw_dim(const std::string& group, long long p, int n, int d,
                const std::string& mults_csv, const std::string& at_csv) {
  require_prime(p);
  std::shared_ptr<const FiniteGroup> g;
  if (group == "cyclic") {
    require_grid(p, n);
    if (checked_pow(p, n) > 4096) throw ConfigError("group order exceeds 4096");
    g = cyclic_group(p, n);
  } else if (group == "heis") {
    g = heisenberg_quotient_group(p, n, d);
  } else {
    throw ConfigError("group must be cyclic or heis");
  }
  std::vector<long long> mults = parse_ll_list(mults_csv);
  if (mults.empty()) {
    // Default: one copy of every irreducible; closed under conjugation, so
    // always symmetric.
    mults.assign(static_cast<size_t>(g->num_irreps()), 1);
  }
  if (static_cast<int>(mults.size()) != g->num_irreps())
    throw ConfigError("mults must list one multiplicity per irreducible (" +
                      std::to_string(g->num_irreps()) + ")");
  const FiniteRep rep{g, mults};
  if (!rep.is_symmetric())
    throw ConfigError("the chosen representation is not symmetric");
  std::vector<long long> at = parse_ll_list(at_csv);
  if (at.empty()) at = {1, 2, 10, 100};
  json rows = json::array();
  for (long long steps : at) {
    if (steps < 1 || steps > 100000) throw ConfigError("n out of range [1, 10^5]");
    const Rat pn = rw_return_prob(rep, steps);
    json row{{"n", steps},
             {"p_n", rat_to_string(pn)},
             {"p_n_float", fmt_double(to_double(pn))}};
    if (steps >= 2) {
      row["estimate"] = fmt_double(rw_dim_estimate(rep, steps));
      row["upper_bound"] = fmt_double(rw_dim_upper_bound(g->order, steps));
    }
    rows.push_back(row);
  }
  json result;
  result["group"] = g->name;
  result["order"] = g->order;
  result["rep_dim"] = rep.dim();
  result["rows"] = rows;
  return result;
}

json run_dirac_spectrum(long long p, const std::string& group, int d, double s,
                        int shells) {
  require_prime(p);
  if (shells < 0 || shells > 64) throw ConfigError("shells out of range [0, 64]");
  if (!(s > 0)) throw ConfigError("s must be > 0");
  const auto kind = group == "heis" ? VilenkinGroupKind::Heisenberg
                                    : VilenkinGroupKind::PadicIntegers;
  if (kind == VilenkinGroupKind::Heisenberg && shells > 4)
    throw ConfigError("shells out of range [0, 4] for the Heisenberg group");
  const auto t = make_dirac_truncation(p, kind, d, s, shells);
  json rows = json::array();
  for (int n = 0; n <= shells; ++n)
    rows.push_back(json{{"shell", n},
                        {"multiplicity", t.shell_dims[static_cast<size_t>(n)]},
                        {"eigenvalue", fmt_double(t.eigenvalues[static_cast<size_t>(n)])}});
  const auto ts = dirac_trace_power(t);
  json result;
  result["rows"] = rows;
  result["trace_partial_sum"] = rat_to_string(ts.partial_sum);
  result["tail_lower"] = rat_to_string(ts.tail_lower);
  result["tail_upper"] = rat_to_string(ts.tail_upper);
  return result;
}

json run_commutator_check(long long p, int shell, int L, double s, bool& violation) {
  require_prime(p);
  if (shell < 0 || shell > 3) throw ConfigError("shell out of range [0, 3]");
  if (L < shell || L > 6) throw ConfigError("L out of range [shell, 6]");
  require_grid(p, L);
  const auto t = make_dirac_truncation(p, VilenkinGroupKind::PadicIntegers, 1, s, L);
  // The first character of the shell.
  const MonnaIndex a = shell == 0 ? 0 : static_cast<MonnaIndex>(checked_pow(p, shell - 1));
  const auto f = character_function<CD>(p, L, a);
  const auto m = commutator_block(f, t, L);
  double beyond = 0.0, inside = 0.0;
  for (long long j = 0; j < m.cols; ++j)
    for (long long k = 0; k < m.rows; ++k) {
      const double mag = std::abs(m.at(k, j));
      if (shell_of(p, static_cast<MonnaIndex>(j)) > shell)
        beyond = std::max(beyond, mag);
      else
        inside = std::max(inside, mag);
    }
  if (beyond != 0.0) violation = true;
  json result;
  result["f"] = json{{"monna_index", a}, {"shell", shell}};
  result["matrix_dim"] = m.rows;
  result["max_entry_beyond_shell"] = fmt_double(beyond);
  result["max_entry_within_block"] = fmt_double(inside);
  result["vanishes_beyond_shell"] = beyond == 0.0;
  return result;
}

json run_qdq_check(long long p, int r, long long x, int L, int trials,
                   unsigned seed, double tol, bool& violation) {
  require_prime(p);
  if (r < 1 || r > 3) throw ConfigError("r out of range [1, 3]");
  if (L < 1 || L > 4) throw ConfigError("L out of range [1, 4]");
  require_grid(p, r + L);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.25, 4.0);
  double worst_offdiag = 0, worst_diag = 0;
  for (int t = 0; t < trials; ++t) {
    std::map<CharIndex, double> lambda;
    for (const CharIndex& idx : char_indices_up_to_level(p, r + L))
      lambda[idx] = dist(rng);
    const auto rep = compressed_qdq(lambda, Coset(p, r, x), L, tol);
    worst_offdiag = std::max(worst_offdiag, rep.max_offdiag);
    worst_diag = std::max(worst_diag, rep.max_diag_error);
    if (!rep.index || *rep.index != 0) violation = true;
  }
  if (worst_offdiag > tol || worst_diag > tol) violation = true;
  json result;
  result["trials"] = trials;
  result["basis_size"] = checked_pow(p, L);
  result["max_offdiagonal"] = fmt_double(worst_offdiag);
  result["max_diagonal_error"] = fmt_double(worst_diag);
  result["compressed_index"] = 0;
  result["tolerance"] = fmt_double(tol);
  return result;
}

json run_gk_growth(long long p, int N, int gens, int k_max, unsigned seed,
                   bool& violation) {
  require_prime(p);
  if (N < 1 || N > 4) throw ConfigError("N out of range [1, 4]");
  if (gens < 1 || gens > 6) throw ConfigError("gens out of range [1, 6]");
  if (k_max < 1 || k_max > 200) throw ConfigError("k-max out of range [1, 200]");
  require_grid(p, N);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<LevelFunction<CD>> generators;
  for (int i = 0; i < gens; ++i) {
    LevelFunction<CD> f(p, N);
    for (size_t z = 0; z < f.size(); ++z) f[z] = CD{dist(rng), dist(rng)};
    generators.push_back(std::move(f));
  }
  const auto dims = gk_growth(generators, k_max);
  for (size_t k = 1; k < dims.size(); ++k)
    if (dims[k] < dims[k - 1] || dims[k] > checked_pow(p, N)) violation = true;
  json result;
  result["dims"] = dims;
  result["bound"] = checked_pow(p, N);
  result["stabilized"] = dims.size() >= 2 && dims.back() == dims[dims.size() - 2];
  return result;
}

json run_phi_check(long long p, int m, std::uint64_t m0, std::uint64_t N,
                   const std::string& family, std::uint64_t c,
                   const std::string& values_csv, bool& violation) {
  require_prime(p);
  if (m < 0 || m > 4) throw ConfigError("m out of range [0, 4]");
  if (N < 1 || N > 100000) throw ConfigError("N out of range [1, 10^5]");
  PhiTable table{p, {}, {}};
  if (!values_csv.empty()) {
    for (long long v : parse_ll_list(values_csv))
      table.values.push_back(static_cast<std::uint64_t>(v));
    if (table.values.size() != N) throw ConfigError("values must list N entries");
  } else {
    const std::uint64_t B = static_cast<std::uint64_t>(checked_pow(p, m + 1));
    for (std::uint64_t n = 0; n < N; ++n) {
      if (family == "translate")
        table.values.push_back(n + c * B);
      else if (family == "sigma")
        table.values.push_back(sigma(p, c, n));
      else if (family == "swap") {
        std::uint64_t v = n;
        if (n == 0) v = B;
        else if (n == B) v = 0;
        table.values.push_back(v);
      } else {
        throw ConfigError("family must be translate, sigma, or swap");
      }
    }
  }
  const auto commuting = phi_commuting_check(table, m);
  const auto blocks = phi_block_check(table, m, m0);
  if (!commuting.passed() || !blocks.passed()) violation = true;
  json result;
  result["commuting"] = json{{"checked", commuting.checked},
                             {"violations", commuting.violations},
                             {"passed", commuting.passed()}};
  json bviol = json::array();
  for (const auto& v : blocks.violations)
    bviol.push_back(json{{"block", v.block}, {"image_blocks", v.image_blocks}});
  result["blocks"] = json{{"checked", blocks.blocks_checked},
                          {"violations", bviol},
                          {"passed", blocks.passed()}};
  result["note"] = violation ? "violation found on the scanned range"
                             : "no violation found on [0," + std::to_string(N) + ")";
  return result;
}

json run_dual_enumerate(long long p, int d, int n) {
  require_prime(p);
  if (d < 1 || d > 2) throw ConfigError("d must be 1 or 2");
  if (n < 0 || n > 3) throw ConfigError("n out of range [0, 3]");
  require_grid(p, n * (2 * d + 1));
  const auto dual = enumerate_dual(p, d, n);
  json rows = json::array();
  long long total = 0;
  for (const auto& z : dual) {
    total += z.dim() * z.dim();
    rows.push_back(json{{"zeta", z.label()},
                        {"j", z.j()},
                        {"dim", z.dim()},
                        {"norm", z.norm()}});
  }
  json result;
  result["classes"] = rows;
  result["count"] = dual.size();
  result["sum_dim_sq"] = total;
  result["peter_weyl"] = checked_pow(p, n * (2 * d + 1));
  result["shell_size"] = enumerate_dual_shell(p, d, n).size();
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic analysis on compact Vilenkin groups"};
  app.require_subcommand(1);

  long long p = 2, x = 0, vz = 0;
  int r = 1, m = 0, n = 1, d = 1, L = 3, N = 2, shells = 3, shell = 1;
  int trials = 20, gens = 2, k_max = 12;
  std::uint64_t max_n = 64, m0 = 0, bigN = 16, c = 1;
  unsigned seed = 1;
  double s = 1.0, tol = 1e-9;
  std::string format = "json", out, group = "cyclic", family = "translate";
  std::string vx = "0", vy = "0", mults, at, values;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or csv");
    cmd->add_option("--out", out, "write the report to a file");
  };

  auto* di = app.add_subcommand("decompose-indicator",
                                "K_0 generator of Z_p as a character sum");
  di->add_option("--p", p)->required();
  di->add_option("--r", r)->required();
  di->add_option("--x", x)->required();
  add_common(di);

  auto* hd = app.add_subcommand("heis-decompose",
                                "K_0 generator of H_d(Z_p) in matrix coefficients");
  hd->add_option("--p", p)->required();
  hd->add_option("--d", d);
  hd->add_option("--r", r)->required();
  hd->add_option("--vx", vx);
  hd->add_option("--vy", vy);
  hd->add_option("--vz", vz);
  add_common(hd);

  auto* st = app.add_subcommand("sigma-table", "closed-form sigma vs brute force");
  st->add_option("--p", p)->required();
  st->add_option("--m", m)->required();
  st->add_option("--max-n", max_n);
  add_common(st);

  auto* tb = app.add_subcommand("transform-bench", "fast vs naive transform");
  tb->add_option("--p", p)->required();
  tb->add_option("--r", r)->required();
  tb->add_option("--trials", trials);
  tb->add_option("--seed", seed);
  tb->add_option("--tolerance", tol);
  add_common(tb);

  auto* rw = app.add_subcommand("rw-dim", "random-walk return probabilities");
  rw->add_option("--group", group, "cyclic or heis");
  rw->add_option("--p", p)->required();
  rw->add_option("--n", n, "quotient level");
  rw->add_option("--d", d);
  rw->add_option("--mults", mults, "multiplicity per irreducible, CSV");
  rw->add_option("--at", at, "step counts, CSV");
  add_common(rw);

  auto* ds = app.add_subcommand("dirac-spectrum", "Dirac truncation table");
  ds->add_option("--p", p)->required();
  ds->add_option("--group", group, "zp or heis");
  ds->add_option("--d", d);
  ds->add_option("--s", s);
  ds->add_option("--shells", shells);
  add_common(ds);

  auto* cc = app.add_subcommand("commutator-check",
                                "[D, pi(f)] vanishes beyond f's shell");
  cc->add_option("--p", p)->required();
  cc->add_option("--shell", shell);
  cc->add_option("--L", L);
  cc->add_option("--s", s);
  add_common(cc);

  auto* qd = app.add_subcommand("qdq-check", "diagonality of the compression qDq");
  qd->add_option("--p", p)->required();
  qd->add_option("--r", r);
  qd->add_option("--x", x);
  qd->add_option("--L", L);
  qd->add_option("--trials", trials);
  qd->add_option("--seed", seed);
  qd->add_option("--tolerance", tol);
  add_common(qd);

  auto* gk = app.add_subcommand("gk-growth", "dim V_k growth sequence");
  gk->add_option("--p", p)->required();
  gk->add_option("--N", N);
  gk->add_option("--gens", gens);
  gk->add_option("--k-max", k_max);
  gk->add_option("--seed", seed);
  add_common(gk);

  auto* pc = app.add_subcommand("phi-check", "phi/sigma obstruction checkers");
  pc->add_option("--p", p)->required();
  pc->add_option("--m", m);
  pc->add_option("--m0", m0);
  pc->add_option("--N", bigN);
  pc->add_option("--family", family, "translate, sigma, or swap");
  pc->add_option("--c", c);
  pc->add_option("--values", values, "explicit table, CSV");
  add_common(pc);

  auto* de = app.add_subcommand("dual-enumerate", "unitary dual of H_d at level n");
  de->add_option("--p", p)->required();
  de->add_option("--d", d);
  de->add_option("--n", n);
  add_common(de);

  CLI11_PARSE(app, argc, argv);
  CLI::App* cmd = app.get_subcommands().front();

  Emitter emitter;
  emitter.command = cmd->get_name();
  emitter.format = format;
  emitter.out_path = out;
  if (format != "json" && format != "csv") {
    std::cerr << R"({"error":"format must be json or csv"})" << "\n";
    return 2;
  }
  for (const CLI::Option* opt : cmd->get_options()) {
    if (!opt->count() || opt->get_name().size() < 3) continue;
    emitter.config[opt->get_name().substr(2)] = opt->results().front();
  }

  try {
    bool violation = false;
    json result;
    if (cmd == di) result = run_decompose_indicator(p, r, x);
    else if (cmd == hd) result = run_heis_decompose(p, d, r, vx, vy, vz);
    else if (cmd == st) result = run_sigma_table(p, m, max_n, violation);
    else if (cmd == tb) result = run_transform_bench(p, r, trials, seed, tol, violation);
    else if (cmd == rw) result = run_rw_dim(group, p, n, d, mults, at);
    else if (cmd == ds) result = run_dirac_spectrum(p, group, d, s, shells);
    else if (cmd == cc) result = run_commutator_check(p, shell, L, s, violation);
    else if (cmd == qd) result = run_qdq_check(p, r, x, L, trials, seed, tol, violation);
    else if (cmd == gk) result = run_gk_growth(p, N, gens, k_max, seed, violation);
    else if (cmd == pc) result = run_phi_check(p, m, m0, bigN, family, c, values, violation);
    else if (cmd == de) result = run_dual_enumerate(p, d, n);
    return emitter.emit(result, violation ? "violation-found" : "ok");
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
}

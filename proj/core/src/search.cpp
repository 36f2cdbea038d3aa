#include "chebsalem/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "chebsalem/errors.hpp"
#include "chebsalem/fixtures.hpp"

namespace chebsalem {

namespace {

constexpr std::uint64_t kChunk = 2048;

ChebCoords coords_at(std::uint64_t index, const std::vector<long>& vals, int degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  const std::uint64_t base = vals.size();
  for (int j = degree - 1; j >= 0; --j) {
    c[static_cast<std::size_t>(j)] = vals[index % base];
    index /= base;
  }
  c.back() = 1;
  return ChebCoords(std::move(c));
}

bool alternates(const ChebCoords& c) {
  const int d = c.degree();
  for (int j = 0; j < d; ++j) {
    const int s = sgn(c.coords()[static_cast<std::size_t>(j)]);
    if (s != 0 && s != ((d - j) % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

// Power sums of the roots give their variance exactly: it is >= 0 for a
// hyperbolic polynomial and at most bound^2 / 4 when the span is below bound.
bool variance_admissible(const IntPoly& p, const mpq_class& bound) {
  const int d = p.degree();
  if (d < 2) return true;
  const mpq_class lc = p.leading();
  const mpq_class e1 = -mpq_class(p.coeff(d - 1)) / lc;
  const mpq_class e2 = mpq_class(p.coeff(d - 2)) / lc;
  const mpq_class s2 = e1 * e1 - 2 * e2;
  const mpq_class spread = s2 - e1 * e1 / d;  // sum of squared deviations from the mean
  return spread >= 0 && spread <= d * bound * bound / 4;
}

std::optional<SearchHit> evaluate_candidate(const ChebCoords& coords, const SearchConfig& cfg) {
  if (cfg.prune_alternating && !alternates(coords)) return std::nullopt;
  IntPoly p = from_cheb(coords);
  if (cfg.require_hyperbolic && !variance_admissible(p, cfg.span_bound)) return std::nullopt;
  const RealRootSolver solver(p);
  const int n_real = solver.count_real();
  if (n_real == 0 || (cfg.require_hyperbolic && n_real != p.degree())) return std::nullopt;
  const SpanComparison cmp = compare_span(p, cfg.span_bound);
  if (cmp.order != Ordering::Less) return std::nullopt;
  const bool kron = is_kronecker(p);
  if (cfg.kronecker_only && !kron) return std::nullopt;
  SearchHit hit;
  hit.coords = coords;
  hit.canonical_form = canonical_form(p);
  hit.poly = std::move(p);
  hit.span_enclosure = cmp.enclosure;
  if (n_real >= 2) {
    const RatInterval fine = span(hit.poly);
    hit.span_enclosure = {std::max(fine.lo, cmp.enclosure.lo), std::min(fine.hi, cmp.enclosure.hi)};
  }
  if (hit.span_enclosure.lo < 0) hit.span_enclosure.lo = 0;
  hit.kronecker = kron;
  return hit;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("CHEBSALEM_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::uint64_t candidate_count(const SearchConfig& config) {
  std::vector<long> vals = config.coeff_set;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::uint64_t n = 1;
  for (int i = 0; i < config.degree; ++i) {
    if (vals.empty()) return 0;
    if (n > (kMaxCandidates + 1) / vals.size() + 1) return kMaxCandidates + 1;
    n *= vals.size();
  }
  return n;
}

IntPoly canonical_form(const IntPoly& p) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("canonical_form needs degree >= 1");
  const mpq_class mean = -mpq_class(p.coeff(d - 1)) / (mpq_class(p.leading()) * d);
  const IntPoly a = p.shifted(floor_of(mean));
  const mpq_class mean_a = mean - floor_of(mean);
  IntPoly r = p.reflected();
  if (d % 2 != 0) r = -r;
  const IntPoly b = r.shifted(floor_of(-mean));
  if (mean_a < mpq_class(1, 2) && mean_a != 0) return a;
  if (mean_a > mpq_class(1, 2)) return b;
  return to_cheb(b) < to_cheb(a) ? b : a;
}

void enumerate(const SearchConfig& config, const std::function<void(const SearchHit&)>& sink) {
  if (config.degree < 1) throw InvalidParams("search degree must be >= 1");
  if (config.coeff_set.empty()) throw InvalidParams("search coefficient set is empty");
  if (config.span_bound <= 0) throw InvalidParams("span bound must be positive");
  const std::uint64_t total = candidate_count(config);
  if (total > kMaxCandidates)
    throw SearchSpaceTooLarge("more than " + std::to_string(kMaxCandidates) + " candidates");

  std::vector<long> vals = config.coeff_set;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  const int threads = std::max(1, config.threads > 0 ? config.threads : default_threads());

  const std::uint64_t n_chunks = (total + kChunk - 1) / kChunk;
  const std::uint64_t wave = static_cast<std::uint64_t>(threads) * 4;
  std::set<std::vector<mpz_class>> seen;
  for (std::uint64_t first = 0; first < n_chunks; first += wave) {
    const std::uint64_t count = std::min(wave, n_chunks - first);
    std::vector<std::vector<SearchHit>> results(count);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t k; (k = next.fetch_add(1)) < count;) {
        const std::uint64_t lo = (first + k) * kChunk;
        const std::uint64_t hi = std::min(total, lo + kChunk);
        for (std::uint64_t i = lo; i < hi; ++i)
          if (auto h = evaluate_candidate(coords_at(i, vals, config.degree), config)) results[k].push_back(std::move(*h));
      }
    };
    const int spawn = static_cast<int>(std::min<std::uint64_t>(count, threads)) - 1;
    std::vector<std::jthread> pool;
    for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
    work();
    pool.clear();
    for (const auto& chunk : results)
      for (const auto& hit : chunk)
        if (seen.insert(hit.canonical_form.vec()).second) sink(hit);
  }
}

std::vector<SearchHit> enumerate(const SearchConfig& config) {
  std::vector<SearchHit> out;
  enumerate(config, [&](const SearchHit& h) { out.push_back(h); });
  return out;
}

Table8Report table8_report() {
  Table8Report rep;
  std::vector<mpq_class> tol;
  for (const auto& row : table8_rows()) {
    Table8RowReport r;
    r.label = row.label;
    r.poly = from_cheb(ChebCoords(std::vector<mpz_class>(row.coords.begin(), row.coords.end())));
    r.monic_degree8 = r.poly.degree() == 8 && r.poly.is_monic();
    r.hyperbolic = RealRootSolver(r.poly).count_real() == r.poly.degree();
    r.kronecker = is_kronecker(r.poly);
    r.kronecker_expected = row.kronecker;
    if (r.hyperbolic) {
      r.span_below_four = compare_span(r.poly, 4).order == Ordering::Less;
      r.span_enclosure = span(r.poly);
    }
    if (!r.ok() && !rep.first_failure) {
      std::string why = !r.monic_degree8 ? "not monic of degree 8"
                        : !r.hyperbolic  ? "not hyperbolic"
                        : !r.span_below_four ? "span not below 4"
                                             : "cosine-type flag differs";
      rep.first_failure = r.label + ": " + why;
    }
    rep.rows.push_back(std::move(r));
  }
  rep.ordered = true;
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    auto& a = rep.rows[i];
    auto& b = rep.rows[i + 1];
    if (!a.hyperbolic || !b.hyperbolic) {
      rep.ordered = false;
      continue;
    }
    // refine near-ties until the enclosures separate
    mpq_class width = default_refine_width();
    const mpq_class floor_width = mpq_class(1) / (mpz_class(1) << 200);
    while (a.span_enclosure.overlaps(b.span_enclosure) && width > floor_width) {
      width /= 1 << 16;
      a.span_enclosure = span(a.poly, width);
      b.span_enclosure = span(b.poly, width);
    }
    if (!(a.span_enclosure.hi < b.span_enclosure.lo)) {
      rep.ordered = false;
      if (!rep.first_failure) rep.first_failure = b.label + ": span not above " + a.label;
    }
  }
  return rep;
}

Table8Report verify_table8() {
  Table8Report rep = table8_report();
  if (rep.first_failure) {
    const auto& f = *rep.first_failure;
    throw FixtureMismatch(f.substr(0, f.find(':')), f.substr(f.find(':') + 2));
  }
  return rep;
}

Degree18Report degree18_report() {
  Degree18Report rep;
  const auto& c = degree18_coords();
  rep.poly = from_cheb(ChebCoords(std::vector<mpz_class>(c.begin(), c.end())));
  rep.n_real = RealRootSolver(rep.poly).count_real();
  rep.hyperbolic = rep.n_real == rep.poly.degree();
  rep.kronecker = is_kronecker(rep.poly);
  if (rep.hyperbolic) {
    rep.span_below_four = compare_span(rep.poly, 4).order == Ordering::Less;
    rep.span_enclosure = span(rep.poly);
  }
  return rep;
}

Degree18Report verify_degree18() {
  Degree18Report rep = degree18_report();
  if (!rep.hyperbolic) throw FixtureMismatch("degree18", "not hyperbolic");
  if (!rep.span_below_four) throw FixtureMismatch("degree18", "span not below 4");
  if (rep.kronecker) throw FixtureMismatch("degree18", "unexpectedly of cosine type");
  return rep;
}

}  // namespace chebsalem

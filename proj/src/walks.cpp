#include "walks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qgt {

std::vector<Word> standard_steps(const NormalForms& nf) {
  std::vector<Word> steps;
  for (int g = 1; g <= nf.ngens(); ++g) {
    for (int sgn : {1, -1}) {
      Word w = nf.normalize(Word({sgn * g}));
      if (std::find(steps.begin(), steps.end(), w) == steps.end()) steps.push_back(w);
    }
  }
  return steps;
}

namespace {

// Discover the ball of the given radius; returns state words, their ids and
// the transition table under the steps. Transitions leaving the ball are -1.
struct StateSpace {
  std::vector<Word> states;
  std::vector<std::vector<int>> next;  // [state][step]
};

StateSpace explore(const NormalForms& nf, const std::vector<Word>& steps, int radius,
                   size_t cap) {
  StateSpace ss;
  std::map<Word, int> id;
  std::vector<int> dist;
  ss.states.push_back(nf.normalize(Word()));
  id[ss.states[0]] = 0;
  dist.push_back(0);
  for (size_t at = 0; at < ss.states.size(); ++at) {
    if (dist[at] >= radius) continue;
    for (const auto& s : steps) {
      Word t = nf.multiply(ss.states[at], s);
      if (!id.count(t)) {
        if (ss.states.size() >= cap) throw resource_error("walk state cap exceeded");
        id[t] = static_cast<int>(ss.states.size());
        ss.states.push_back(t);
        dist.push_back(dist[at] + 1);
      }
    }
  }
  ss.next.assign(ss.states.size(), std::vector<int>(steps.size(), -1));
  for (size_t c = 0; c < ss.states.size(); ++c)
    for (size_t k = 0; k < steps.size(); ++k) {
      Word t = nf.multiply(ss.states[c], steps[k]);
      auto it = id.find(t);
      ss.next[c][k] = it == id.end() ? -1 : it->second;
    }
  return ss;
}

}  // namespace

std::vector<Int> return_counts(const WalkSpec& spec) {
  if (!spec.nf.valid()) throw input_error("return_counts: ambient admits no normal forms");
  if (spec.horizon < 2) throw input_error("return_counts: horizon must be >= 2");
  // A walk of length n that returns stays within distance n/2 of the
  // identity, so transitions past that radius can be dropped.
  StateSpace ss = explore(spec.nf, spec.steps, spec.horizon / 2, spec.state_cap);
  std::vector<Int> cur(ss.states.size(), Int(0)), nxt(ss.states.size());
  cur[0] = 1;
  std::vector<Int> r;
  r.push_back(1);
  for (int n = 1; n <= spec.horizon; ++n) {
    std::fill(nxt.begin(), nxt.end(), Int(0));
    for (size_t c = 0; c < ss.states.size(); ++c) {
      if (cur[c] == 0) continue;
      for (size_t k = 0; k < spec.steps.size(); ++k) {
        int d = ss.next[c][k];
        if (d >= 0) nxt[static_cast<size_t>(d)] += cur[c];
      }
    }
    std::swap(cur, nxt);
    r.push_back(cur[0]);
  }
  return r;
}

namespace {

// Largest q = p / den with q^k <= x, rounded down (a certified lower bound
// of x^{1/k}).
Rat rational_root_lower(const Rat& x, long k, long den) {
  if (x <= 0) return Rat(0);
  auto ok = [&](long p) {  // (p/den)^k <= x
    if (p <= 0) return true;
    Rat q(p, den);
    q.canonicalize();
    Rat pw(1);
    for (long i = 0; i < k; ++i) pw *= q;
    return pw <= x;
  };
  double approx = std::pow(x.get_d(), 1.0 / static_cast<double>(k));
  long hi = std::max(2L, static_cast<long>((approx + 1.0) * static_cast<double>(den)));
  while (ok(hi)) hi *= 2;
  long lo = 0;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  Rat q(lo, den);
  q.canonicalize();
  return q;
}

// Jacobi coefficients from the moment sequence (Chebyshev algorithm).
// Returns pairs (a_k, b2_{k-1}); stops early when the Hankel quantity
// vanishes (finitely supported measure).
struct JacobiData {
  std::vector<Rat> a;   // diagonal
  std::vector<Rat> b2;  // squared off-diagonal, b2[0] unused
};

JacobiData jacobi_from_moments(const std::vector<Rat>& m) {
  size_t twok = m.size() - 1;
  size_t kmax = twok / 2;
  JacobiData jd;
  if (m[0] == 0) return jd;
  std::vector<std::vector<Rat>> sigma(kmax + 2);
  // sigma[0] = moments
  sigma[0] = m;
  jd.a.push_back(m[1] / m[0]);
  jd.b2.push_back(Rat(0));
  for (size_t k = 1; k <= kmax; ++k) {
    const std::vector<Rat>& prev = sigma[k - 1];
    const std::vector<Rat>* prev2 = k >= 2 ? &sigma[k - 2] : nullptr;
    std::vector<Rat> cur(m.size(), Rat(0));
    bool any = false;
    for (size_t j = k; j + k <= twok; ++j) {
      Rat v = prev[j + 1] - jd.a[k - 1] * prev[j];
      if (k >= 2) v -= jd.b2[k - 1] * (*prev2)[j];
      cur[j] = v;
      any = true;
    }
    if (!any) break;
    sigma[k] = cur;
    if (cur[k] == 0) break;  // measure supported on k points
    Rat b2 = cur[k] / sigma[k - 1][k - 1];
    Rat a = cur[k + 1] / cur[k] - sigma[k - 1][k] / sigma[k - 1][k - 1];
    jd.b2.push_back(b2);
    jd.a.push_back(a);
  }
  return jd;
}

// All leading principal characteristic polynomials positive at x iff
// x > lambda_max of the Jacobi matrix.
bool above_lambda_max(const JacobiData& jd, const Rat& x) {
  Rat pm1(1), p0 = x - jd.a[0];
  if (p0 <= 0) return false;
  for (size_t k = 1; k < jd.a.size(); ++k) {
    Rat p1 = (x - jd.a[k]) * p0 - jd.b2[k] * pm1;
    if (p1 <= 0) return false;
    pm1 = p0;
    p0 = p1;
  }
  return true;
}

}  // namespace

SpectralBound spectral_radius_estimate(const std::vector<Int>& counts, size_t step_count,
                                       long den) {
  if (counts.size() < 7) throw input_error("spectral estimate needs horizon >= 6");
  if (step_count == 0) throw input_error("spectral estimate needs a nonempty step set");
  SpectralBound out;
  out.lower_bound = out.root_bound = out.ratio_bound = out.lanczos_bound = Rat(0);
  Int s(static_cast<unsigned long>(step_count));

  // root bound: (r_{2n})^{1/2n} / steps, monotone in n by supermultiplicativity
  Int spow(1);
  for (size_t n = 1; 2 * n < counts.size(); ++n) {
    spow *= s * s;
    const Int& r2n = counts[2 * n];
    if (r2n == 0) continue;
    Rat x(r2n, spow);
    x.canonicalize();
    Rat b = rational_root_lower(x, static_cast<long>(2 * n), den);
    out.root_sequence.emplace_back(static_cast<int>(2 * n), b);
    out.root_bound = std::max(out.root_bound, b);
  }

  // ratio bound: p_{2n+2}/p_{2n} is nondecreasing with limit rho^2
  for (size_t n = 1; 2 * n + 2 < counts.size(); ++n) {
    if (counts[2 * n] == 0) continue;
    Rat ratio(counts[2 * n + 2], counts[2 * n] * s * s);
    ratio.canonicalize();
    out.ratio_bound = std::max(out.ratio_bound, rational_root_lower(ratio, 2, den));
  }

  // moment (Lanczos) bound: lambda_max of the Jacobi truncation built from
  // the normalized moments; a Rayleigh quotient on the Krylov subspace.
  {
    std::vector<Rat> m;
    Int p(1);
    size_t even_moments = (counts.size() - 1) / 2 * 2;
    for (size_t j = 0; j <= even_moments; ++j) {
      Rat mj(counts[j], p);
      mj.canonicalize();
      m.push_back(mj);
      p *= s;
    }
    JacobiData jd = jacobi_from_moments(m);
    if (!jd.a.empty()) {
      Rat lo(0), hi(1);
      if (!above_lambda_max(jd, hi)) {
        out.lanczos_bound = Rat(1);
      } else {
        // bisect to precision 1/den, report the certified lower end
        while ((hi - lo) * den > 1) {
          Rat mid = (lo + hi) / 2;
          if (above_lambda_max(jd, mid))
            hi = mid;
          else
            lo = mid;
        }
        out.lanczos_bound = lo;
      }
    }
  }

  out.lower_bound = std::max({out.root_bound, out.ratio_bound, out.lanczos_bound});
  std::ostringstream tr;
  tr << "root bound nondecreasing to " << out.root_bound.get_d() << "; ratio bound "
     << out.ratio_bound.get_d() << "; moment bound " << out.lanczos_bound.get_d();
  out.trend = tr.str();
  return out;
}

BallGrowth ball_sizes(const NormalForms& nf, const std::vector<Word>& gens, int radius,
                      size_t state_cap) {
  if (!nf.valid()) throw input_error("ball_sizes: ambient admits no normal forms");
  BallGrowth out;
  std::vector<Word> steps;
  for (const auto& g : gens)
    for (const Word& w : {nf.normalize(g), nf.invert(g)})
      if (std::find(steps.begin(), steps.end(), w) == steps.end()) steps.push_back(w);
  std::map<Word, int> dist;
  std::vector<Word> frontier{nf.normalize(Word())};
  dist[frontier[0]] = 0;
  out.sizes.push_back(1);
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& s : steps) {
        Word t = nf.multiply(w, s);
        if (!dist.count(t)) {
          if (dist.size() >= state_cap) throw resource_error("ball state cap exceeded");
          dist[t] = r;
          next.push_back(t);
        }
      }
    }
    frontier = std::move(next);
    out.sizes.push_back(Int(static_cast<unsigned long>(dist.size())));
    if (frontier.empty()) break;
  }
  while (static_cast<int>(out.sizes.size()) <= radius) out.sizes.push_back(out.sizes.back());

  // growth fit
  size_t n = out.sizes.size();
  std::ostringstream diag;
  if (n >= 2 && out.sizes[n - 1] == out.sizes[n - 2]) {
    out.fit = "finite";
    diag << "ball stabilized at " << out.sizes.back().get_str();
  } else if (n >= 6) {
    bool expo = true;
    for (size_t i = n - 5; i < n; ++i) {
      // |B_i| >= |B_{i-1}| * 21/20
      if (out.sizes[i] * 20 < out.sizes[i - 1] * 21) expo = false;
    }
    if (expo) {
      out.fit = "exponential";
      diag << "|B_{n+1}|/|B_n| stayed above 1.05 over the last 5 radii";
    } else {
      // successive sphere differences: stable ratios indicate polynomial growth
      std::vector<Int> sphere;
      for (size_t i = 1; i < n; ++i) sphere.push_back(out.sizes[i] - out.sizes[i - 1]);
      bool poly = true;
      for (size_t i = sphere.size() - 4; i < sphere.size(); ++i) {
        // sphere ratio within [1 - 1/20, 1 + 1/20]
        if (sphere[i - 1] == 0 || sphere[i] * 20 > sphere[i - 1] * 21 ||
            sphere[i] * 20 < sphere[i - 1] * 19)
          poly = false;
      }
      out.fit = poly ? "polynomial" : "inconclusive";
      diag << "sphere-size ratios over the last 5 radii "
           << (poly ? "stabilized near 1" : "neither stabilized nor stayed above 1.05");
    }
  } else {
    out.fit = "inconclusive";
    diag << "radius too small for a fit";
  }
  out.diagnostics = diag.str();
  return out;
}

}  // namespace qgt

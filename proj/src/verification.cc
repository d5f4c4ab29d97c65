// Copyright 2026 The CICI Authors.
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

#include "cici/verification.h"

#include <cmath>
#include <random>

#include <fmt/format.h>

#include "cici/bounds.h"
#include "cici/independence.h"
#include "cici/inference.h"
#include "cici/synergy.h"

namespace cici::verify {
namespace {

// 20 points over [0.05, 0.95].
std::vector<double> ParamGrid(std::size_t n = 20) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = 0.05 + 0.9 * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return g;
}

std::vector<double> UnitGrid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return g;
}

int Sign(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

std::string Describe(const LikelihoodMatrix& m) {
  return fmt::format("[[{}, {}], [{}, {}]] ({})", m.r(), m.s(), m.t(), m.u(),
                     EvidenceStateName(m.state()));
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records one check; keeps the first failure.
  template <typename F>
  void Check(bool ok, F&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  SuiteResult Finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

class Runner {
 public:
  explicit Runner(const Config& config)
      : config_(config), rng_(config.seed), unit_(0.01, 0.99) {
    belief_b_ = config.belief_b ? config.belief_b : BeliefFn(belief_B);
  }

  std::vector<SuiteResult> Run() {
    std::vector<SuiteResult> out;
    out.push_back(NoisyOrRankOne());
    out.push_back(CiciIndependence());
    out.push_back(CiciConverse());
    out.push_back(SignInvariance());
    out.push_back(AdditiveIdentity());
    out.push_back(CiciSynergyEquality());
    out.push_back(NoisyOrExclusion());
    out.push_back(OracleEquivalence());
    out.push_back(PriorLowerBound());
    out.push_back(IndependentEdge());
    out.push_back(CornerBounds());
    out.push_back(Homogeneity());
    out.push_back(Conversions());
    return out;
  }

 private:
  double Draw() { return unit_(rng_); }

  LikelihoodMatrix RandomMatrix(EvidenceState state = EvidenceState::kPos) {
    const double r = Draw(), s = Draw(), t = Draw(), u = Draw();
    return LikelihoodMatrix(state, r, s, t, u);
  }

  // Rank-one e- table from random (a, b) and the largest admissible c
  // scaled by a random factor.
  LikelihoodMatrix RandomCici() {
    const double a = Draw(), b = Draw();
    const double c_max = 1.0 / std::max({a * b, (1 - a) * b, a * (1 - b),
                                         (1 - a) * (1 - b)});
    return outer_product_matrix(Probability(a), Probability(b),
                                c_max * Draw(), EvidenceState::kNeg);
  }

  SuiteResult NoisyOrRankOne() {
    Suite suite("noisy-or rank one: noisy-or e- table has det 0");
    const auto grid = ParamGrid(10);
    for (double q0 : grid) {
      for (double q1 : grid) {
        for (double q2 : grid) {
          const double det = noisy_or_matrix({q0, q1, q2}).complement().det();
          suite.Check(std::abs(det) <= 1e-12, [&] {
            return fmt::format("q=({}, {}, {}) det e- = {}", q0, q1, q2, det);
          });
        }
      }
    }
    return suite.Finish();
  }

  SuiteResult CiciIndependence() {
    Suite suite("cici independence: CICI e- table keeps parents independent");
    const auto b_grid = UnitGrid(11);
    for (std::size_t i = 0; i < Samples(1000); ++i) {
      const LikelihoodMatrix m_pos = RandomCici().complement();
      for (double b : b_grid) {
        const double lo = belief_b_(BeliefQuery(0, b, 0), m_pos);
        const double hi = belief_b_(BeliefQuery(1, b, 0), m_pos);
        suite.Check(std::abs(lo - hi) < 1e-9, [&] {
          return fmt::format("e+ table {}, b={}: belief_B(a=0,f=0)={} vs "
                             "belief_B(a=1,f=0)={}",
                             Describe(m_pos), b, lo, hi);
        });
      }
    }
    return suite.Finish();
  }

  SuiteResult CiciConverse() {
    Suite suite("cici converse: CICI e- table couples parents at e+");
    const auto b_grid = ParamGrid(10);
    for (std::size_t i = 0; i < Samples(1000); ++i) {
      const LikelihoodMatrix m_neg = RandomCici();
      const LikelihoodMatrix m_pos = m_neg.complement();
      if (is_degenerate_double_cici(m_neg)) continue;
      const double gap_rows = std::abs(m_neg.r() - m_neg.s());
      const double gap_cols = std::abs(m_neg.r() - m_neg.t());
      if (gap_rows < 0.05 || gap_cols < 0.05) continue;
      for (double b : b_grid) {
        const double lo = belief_b_(BeliefQuery(0, b, 1), m_pos);
        const double hi = belief_b_(BeliefQuery(1, b, 1), m_pos);
        suite.Check(std::abs(lo - hi) > 1e-6, [&] {
          return fmt::format("e+ table {}, b={}: no dependence at e+ "
                             "(difference {})",
                             Describe(m_pos), b, lo - hi);
        });
      }
    }
    return suite.Finish();
  }

  SuiteResult SignInvariance() {
    Suite suite("sign invariance: determinant sign survives Bayes reversal and scaling");
    for (std::size_t i = 0; i < Samples(10000); ++i) {
      const bool cici = i % 5 == 0;
      const LikelihoodMatrix m = cici ? RandomCici() : RandomMatrix();
      const WeightPair v{Draw(), Draw()};
      const int expected = Sign(m.det(), 1e-12);
      for (auto axis : {ReverseAxis::kA, ReverseAxis::kB}) {
        const double det = bayes_reverse(m, v, axis).table.det();
        suite.Check(Sign(det, 1e-12) == expected, [&] {
          return fmt::format("{} prior ({}, {}): det {} -> {}", Describe(m),
                             v.first, v.second, m.det(), det);
        });
      }
      for (auto axis : {ScaleAxis::kRows, ScaleAxis::kCols}) {
        const double det = scale_axis(m, v, axis).det();
        suite.Check(Sign(det, 1e-12) == expected, [&] {
          return fmt::format("{} scale ({}, {}): det {} -> {}", Describe(m),
                             v.first, v.second, m.det(), det);
        });
      }
    }
    return suite.Finish();
  }

  SuiteResult AdditiveIdentity() {
    Suite suite("additive identity: Y e+ = det e+ - det e-");
    for (std::size_t i = 0; i < Samples(10000); ++i) {
      const LikelihoodMatrix m = RandomMatrix();
      const SynergyReport rep = synergy_report(m);
      const double y_neg = additive_synergy(m.complement());
      suite.Check(std::abs(rep.y_pos - (rep.det_pos - rep.det_neg)) < 1e-12 &&
                      std::abs(y_neg + rep.y_pos) < 1e-12,
                  [&] {
                    return fmt::format("{}: Y={}, det+={}, det-={}, Y-={}",
                                       Describe(m), rep.y_pos, rep.det_pos,
                                       rep.det_neg, y_neg);
                  });
    }
    return suite.Finish();
  }

  SuiteResult CiciSynergyEquality() {
    Suite suite("cici synergy: CICI tables have equal synergies");
    for (std::size_t i = 0; i < Samples(10000); ++i) {
      const LikelihoodMatrix m_pos = RandomCici().complement();
      const SynergyReport rep = synergy_report(m_pos);
      suite.Check(std::abs(rep.det_pos - rep.y_pos) < 1e-9, [&] {
        return fmt::format("{}: det+={}, Y+={}", Describe(m_pos), rep.det_pos,
                           rep.y_pos);
      });
    }
    return suite.Finish();
  }

  SuiteResult NoisyOrExclusion() {
    Suite suite("noisy-or exclusion: noisy-or is exclusionary at e+");
    const auto grid = ParamGrid(20);
    for (double q0 : grid) {
      for (double q1 : grid) {
        for (double q2 : grid) {
          const SynergyReport rep = synergy_report(noisy_or_matrix({q0, q1, q2}));
          suite.Check(rep.y_pos < 0, [&] {
            return fmt::format("q=({}, {}, {}): Y e+ = {}", q0, q1, q2,
                               rep.y_pos);
          });
        }
      }
    }
    return suite.Finish();
  }

  SuiteResult OracleEquivalence() {
    Suite suite("oracle: closed-form beliefs match joint enumeration");
    const auto grid = UnitGrid(Samples(10000) >= 1000 ? 21 : 6);
    const std::size_t matrices = Samples(10000) >= 1000 ? 50 : 3;
    for (std::size_t i = 0; i < matrices; ++i) {
      const LikelihoodMatrix m = RandomMatrix();
      for (double a : grid) {
        for (double b : grid) {
          for (double f : grid) {
            const BeliefQuery q(a, b, f);
            const Marginals oracle = brute_force_oracle(q, m);
            const double pb = belief_b_(q, m);
            const double pa = belief_A(q, m);
            suite.Check(std::abs(pb - oracle.b) <= 1e-12 &&
                            std::abs(pa - oracle.a) <= 1e-12,
                        [&] {
                          return fmt::format(
                              "{} at (a={}, b={}, f={}): belief (A={}, B={}) "
                              "oracle (A={}, B={})",
                              Describe(m), a, b, f, pa, pb, oracle.a.value(),
                              oracle.b.value());
                        });
          }
        }
      }
    }
    return suite.Finish();
  }

  SuiteResult PriorLowerBound() {
    Suite suite("prior bound: e+ half above the prior, e- half below");
    const auto grid = ParamGrid(20);
    for (double q : grid) {
      const LikelihoodMatrix m = noisy_or_matrix({0.9, q, q});
      for (double b : grid) {
        for (double a : grid) {
          const double up = belief_b_(BeliefQuery(a, b, 1), m);
          const double down = belief_b_(BeliefQuery(a, b, 0), m);
          const double mid = belief_b_(BeliefQuery(a, b, 0.5), m);
          suite.Check(up > b && down < b && std::abs(mid - b) < 1e-12, [&] {
            return fmt::format(
                "noisy-or(0.9, {0}, {0}), a={1}, b={2}: f=1 {3}, f=0 {4}, "
                "f=1/2 {5}",
                q, a, b, up, down, mid);
          });
        }
      }
    }
    return suite.Finish();
  }

  SuiteResult IndependentEdge() {
    Suite suite("independent edge: independent edge closed form and bound");
    const auto grid = ParamGrid(20);
    for (double k : grid) {
      for (double w : grid) {
        const FactoredSymmetric p(k, w);
        const LikelihoodMatrix m_pos = factored_symmetric_matrix(p).complement();
        const double half = independent_edge(p, Probability(0.5));
        suite.Check(std::abs(half - k / (1 + k)) <= 1e-12, [&] {
          return fmt::format("k={}: edge at b=1/2 {} != k/(1+k)", k, half);
        });
        for (double b : grid) {
          const double edge = independent_edge(p, Probability(b));
          const double belief = belief_b_(BeliefQuery(0.3, b, 0), m_pos);
          suite.Check(std::abs(edge - belief) <= 1e-12, [&] {
            return fmt::format("k={}, w={}, b={}: edge {} vs belief {}", k, w,
                               b, edge, belief);
          });
          if (b <= 0.5) {
            suite.Check(edge < k, [&] {
              return fmt::format("k={}, b={}: edge {} not below k", k, b, edge);
            });
          }
        }
      }
    }
    return suite.Finish();
  }

  SuiteResult CornerBounds() {
    Suite suite("corner bounds: corner values, bounds, second-order error");
    const auto grid = ParamGrid(20);
    for (double k : grid) {
      for (double w : grid) {
        const FactoredSymmetric p(k, w);
        const LikelihoodMatrix m_pos = factored_symmetric_matrix(p).complement();
        for (double b : grid) {
          const Probability pb(b);
          const auto conf = confirmed_corner(p, pb);
          const auto excl = positive_exclusion(p, pb);
          const double at_conf = belief_b_(BeliefQuery(1, b, 1), m_pos);
          const double at_excl = belief_b_(BeliefQuery(0, b, 1), m_pos);
          suite.Check(std::abs(conf.exact - at_conf) <= 1e-12 &&
                          std::abs(excl.exact - at_excl) <= 1e-12,
                      [&] {
                        return fmt::format(
                            "k={}, w={}, b={}: corners ({}, {}) vs beliefs "
                            "({}, {})",
                            k, w, b, conf.exact, excl.exact, at_conf, at_excl);
                      });
          suite.Check(conf.exact >= b && conf.exact >= conf.approx - k * k &&
                          excl.exact > excl.approx,
                      [&] {
                        return fmt::format(
                            "k={}, w={}, b={}: confirmed {} (approx {}), "
                            "positive exclusion {} (bound {})",
                            k, w, b, conf.exact, conf.approx, excl.exact,
                            excl.approx);
                      });
        }
      }
    }
    auto conf_err = [](double k, double w, double b) {
      const auto c = confirmed_corner({k, w}, Probability(b));
      return std::abs(c.exact - c.approx);
    };
    auto excl_err = [](double k, double w, double b) {
      const auto c = positive_exclusion({k, w}, Probability(b));
      return std::abs(c.exact - c.approx);
    };
    for (double w : grid) {
      for (double b : grid) {
        const double ratio = conf_err(0.1, w, b) / conf_err(0.05, w, b);
        suite.Check(ratio >= 3 && ratio <= 5, [&] {
          return fmt::format("w={}, b={}: confirmed-corner error ratio {}", w,
                             b, ratio);
        });
      }
    }
    for (double k : {0.05, 0.1}) {
      for (double b : grid) {
        const double ratio = excl_err(k, 0.98, b) / excl_err(k, 0.99, b);
        suite.Check(ratio >= 3 && ratio <= 5, [&] {
          return fmt::format("k={}, b={}: positive-exclusion error ratio {}",
                             k, b, ratio);
        });
      }
    }
    return suite.Finish();
  }

  SuiteResult Homogeneity() {
    Suite suite("homogeneity: scaled tables leave beliefs unchanged");
    for (std::size_t i = 0; i < Samples(1000); ++i) {
      const LikelihoodMatrix m = RandomMatrix(EvidenceState::kNeg);
      const BeliefQuery q(Draw(), Draw(), 0);
      for (double c : {0.5, 2.0, 10.0}) {
        const Grid2x2 scaled{c * m.r(), c * m.s(), c * m.t(), c * m.u()};
        const bool dets =
            std::abs(scaled.det() - c * c * m.det()) <= 1e-12 * c * c;
        suite.Check(scaling_invariance_check(m, c, q) && dets, [&] {
          return fmt::format("{} scaled by {} at (a={}, b={})", Describe(m), c,
                             q.a.value(), q.b.value());
        });
      }
    }
    return suite.Finish();
  }

  SuiteResult Conversions() {
    Suite suite("conversions: singular <-> noisy-or <-> symmetric");
    const auto grid = ParamGrid(10);
    for (double q0 : grid) {
      for (double q1 : grid) {
        for (double q2 : grid) {
          const NoisyOrParams p(q0, q1, q2);
          const NoisyOrParams back =
              singular_to_noisy_or(noisy_or_to_singular(p));
          suite.Check(std::abs(back.q0 - q0) <= 1e-12 &&
                          std::abs(back.q1 - q1) <= 1e-12 &&
                          std::abs(back.q2 - q2) <= 1e-12,
                      [&] {
                        return fmt::format("noisy-or ({}, {}, {}) -> ({}, {}, "
                                           "{})",
                                           q0, q1, q2, back.q0, back.q1,
                                           back.q2);
                      });
        }
        const FactoredSymmetric sym(q1, q0);
        const FactoredSymmetric sym_back =
            noisy_or_to_symmetric(symmetric_to_noisy_or(sym));
        suite.Check(std::abs(sym_back.k - sym.k) <= 1e-12 &&
                        std::abs(sym_back.w - sym.w) <= 1e-12,
                    [&] { return fmt::format("symmetric ({}, {})", q1, q0); });
      }
    }
    for (double a : ParamGrid(10)) {
      for (double b : ParamGrid(10)) {
        // a > 1/2 reverses the A columns, b > 1/2 the B rows.
        const SwapClass expected =
            a > 0.5 ? (b > 0.5 ? SwapClass::kBothSwap : SwapClass::kColumnSwap)
                    : (b > 0.5 ? SwapClass::kRowSwap : SwapClass::kNoisyOr);
        const auto canon = canonicalize(
            outer_product_matrix(Probability(a), Probability(b), 1.0,
                                 EvidenceState::kNeg));
        bool named_correctly = canon.swap_class == expected;
        if (expected != SwapClass::kNoisyOr) named_correctly = false;
        try {
          singular_to_noisy_or({a, b, 1.0});
        } catch (const OutOfNoisyOrRange& e) {
          named_correctly = canon.swap_class == expected &&
                            e.swap_class() == expected;
        }
        suite.Check(named_correctly, [&] {
          return fmt::format("singular (a={}, b={}) swap class misreported", a,
                             b);
        });
      }
    }
    return suite.Finish();
  }

  // Suites are sized for the default of 10000 draws; smaller sample counts
  // shrink them proportionally.
  std::size_t Samples(std::size_t nominal) const {
    const std::size_t scaled = nominal * config_.samples / 10000;
    return std::max<std::size_t>(scaled, 1);
  }

  const Config& config_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_;
  BeliefFn belief_b_;
};

}  // namespace

std::vector<SuiteResult> RunAll(const Config& config) {
  return Runner(config).Run();
}

bool PrintSummary(std::ostream& out, const std::vector<SuiteResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << fmt::format("[{}] {} ({} checks)\n", r.passed ? "PASS" : "FAIL",
                       r.name, r.checks);
    if (!r.passed) {
      ++failed;
      out << "       counterexample: " << r.counterexample << '\n';
    }
  }
  out << fmt::format("{} of {} suites passed\n", results.size() - failed,
                     results.size());
  return failed == 0;
}

}  // namespace cici::verify

/*
   Copyright 2026 The intdiff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTDIFF_VERIFY_HPP
#define INTDIFF_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "intdiff/element1.hpp"
#include "intdiff/format.hpp"
#include "intdiff/oracle.hpp"
#include "intdiff/random.hpp"
#include "intdiff/structure.hpp"
#include "intdiff/tensor.hpp"

namespace intdiff::verify {

struct Options {
  std::uint64_t seed = 0;
  /// Overrides the per-check sample count of randomized checks.
  std::optional<std::size_t> samples;

  std::size_t count(std::size_t fallback) const { return samples.value_or(fallback); }
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Records failures; passes when nothing was recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (checks_ - failed_) << "/" << checks_ << " checks";
    for (const auto& f : failures_) os << "; FAILED " << f;
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

namespace detail {

inline RandomBounds light_bounds() {
  RandomBounds b;
  b.max_graded_parts = 2;
  b.max_hdeg = 2;
  b.max_f_terms = 2;
  return b;
}

inline std::string eq_text(const Element1& a, const Element1& b) { return to_text(a) + " vs " + to_text(b); }

}  // namespace detail

inline Result relations(const Options&) {
  Checker ck;
  const Element1 d = Element1::derivative(), in = Element1::integral(), h = Element1::h(),
                 x = Element1::x(), one = Element1::one();
  auto eq = [&ck](const Element1& a, const Element1& b, const std::string& name) {
    ck.expect(a == b, name + ": " + detail::eq_text(a, b));
  };
  const Element1 e00 = one - in * d;
  eq(d * in, one, "dI = 1");
  eq(h * in - in * h, in, "[H,I] = I");
  eq(h * d - d * h, -d, "[H,d] = -d");
  eq(h * e00, e00, "H(1-Id) = 1-Id");
  eq(e00 * h, e00, "(1-Id)H = 1-Id");
  eq(in * d, one - Element1::e(0, 0), "Id = 1 - e(0,0)");
  eq(x, in * h, "x = IH");
  eq(x * x, Element1::graded_part(2, HPoly::rising(2)), "x^2 = I^2 H(H+1)");
  eq(Element1::integral(2) * Element1::derivative(2), one - Element1::e(0, 0) - Element1::e(1, 1),
     "I^2 d^2 = 1 - e(0,0) - e(1,1)");
  eq(in * h, (h - one) * in, "IH = (H-1)I");
  eq(h * d, d * (h - one), "Hd = d(H-1)");
  for (Index i = 0; i <= 5; ++i)
    for (Index j = 0; j <= 5; ++j) {
      const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const Element1 eij = Element1::e(i, j);
      eq(power(in, static_cast<unsigned>(i)) * power(d, static_cast<unsigned>(j)) -
             power(in, static_cast<unsigned>(i + 1)) * power(d, static_cast<unsigned>(j + 1)),
         eij, "e" + tag + " = I^i d^j - I^(i+1) d^(j+1)");
      eq(power(in, static_cast<unsigned>(i)) * Element1::e(0, 0) * power(d, static_cast<unsigned>(j)), eij,
         "e" + tag + " = I^i e(0,0) d^j");
      eq(in * eij, Element1::e(i + 1, j), "I e" + tag);
      eq(eij * in, j > 0 ? Element1::e(i, j - 1) : Element1(), "e" + tag + " I");
      eq(d * eij, i > 0 ? Element1::e(i - 1, j) : Element1(), "d e" + tag);
      eq(eij * d, Element1::e(i, j + 1), "e" + tag + " d");
      for (Index k = 0; k <= 5; ++k)
        for (Index l = 0; l <= 5; ++l)
          eq(eij * Element1::e(k, l), j == k ? Element1::e(i, l) : Element1(), "e" + tag + " e(k,l)");
    }
  for (Index i = 0; i <= 6; ++i) {
    const Element1 eii = Element1::e(i, i);
    eq(h * eii, Rational(i + 1) * eii, "H e(i,i)");
    eq(eii * h, Rational(i + 1) * eii, "e(i,i) H");
  }
  return {1, "relations", ck.ok(), ck.summary(), 0, 1.0};
}

inline Result oracle_equivalence(const Options& opt) {
  Checker ck;
  RandomSource rnd(opt.seed);
  const std::size_t n = opt.count(500);
  for (std::size_t k = 0; k < n; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    ck.expect(consistent(a, b, 24), "pair " + std::to_string(k) + ": " + to_text(a) + " | " + to_text(b));
  }
  return {2, "oracle equivalence (N = 24)", ck.ok(), ck.summary(), 0, 30.0};
}

inline Result matrix_unit_scaling(const Options&) {
  Checker ck;
  const std::size_t n = 10;
  for (Index i = 0; i <= 8; ++i)
    for (Index j = 0; j <= 8; ++j) {
      const TruncMatrix m = to_monomial_matrix(Element1::e(i, j), n);
      const Rational scale = factorial(static_cast<unsigned>(j)) / factorial(static_cast<unsigned>(i));
      bool ok = true;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const bool hit = static_cast<Index>(r) == i && static_cast<Index>(c) == j;
          ok = ok && m(r, c) == (hit ? scale : Rational(0));
        }
      ck.expect(ok, "e(" + std::to_string(i) + "," + std::to_string(j) + ") = (j!/i!) E");
    }
  return {3, "e(i,j) = (j!/i!) E(i,j), i,j <= 8", ck.ok(), ck.summary(), 0, 1.0};
}

inline Result q_dimensions(const Options&) {
  Checker ck;
  const auto d = q_dims(12);
  ck.expect(d.size() == 13, "length");
  for (std::size_t i = 0; i < d.size(); ++i)
    ck.expect(d[i] == (i + 1) * (i + 2) / 2, "q_dims[" + std::to_string(i) + "] = " + std::to_string(d[i]));
  return {4, "Q dimension counts (i <= 12)", ck.ok(), ck.summary(), 0, 1.0};
}

inline Result f_multiplicity(const Options&) {
  Checker ck;
  const auto dims = bimodule_filtration_dims({Element1::e(0, 0)}, 10);
  for (std::size_t i = 0; i < dims.size(); ++i)
    ck.expect(dims[i] == (i + 1) * (i + 2) / 2, "dim V_" + std::to_string(i) + " = " + std::to_string(dims[i]));
  const auto rep = multiplicity_report(dims);
  ck.expect(rep.conclusive && rep.degree == 2 && rep.leading_difference == 1, "multiplicity report (2, 1)");
  return {5, "F multiplicity 1", ck.ok(), ck.summary(), 0, 10.0};
}

/// dim V_i for generators {1, I}, i <= 14 (regression anchor).
inline const std::vector<std::size_t>& one_integral_dims() {
  static const std::vector<std::size_t> dims = {2,  7,   15,  26,  40,  57,  77, 100,
                                                126, 155, 187, 222, 260, 301, 345};
  return dims;
}

inline Result i1_multiplicity(const Options&) {
  Checker ck;
  const auto dims = bimodule_filtration_dims({Element1::one(), Element1::integral()}, 14);
  ck.expect(dims == one_integral_dims(), "frozen dimension table");
  const auto rep = multiplicity_report(dims);
  ck.expect(rep.conclusive && rep.degree == 2 && rep.leading_difference == 3,
            "second difference stabilises at 3");
  ck.expect(rep.conclusive && dims.size() - rep.stable_from >= kStableWindow, "stable over >= 4 indices");
  std::ostringstream os;
  os << ck.summary() << "; second difference " << rep.leading_difference.value_or(-1) << " from i = "
     << rep.stable_from;
  return {6, "I_1 multiplicity 3 (generators 1, I)", ck.ok(), os.str(), 0, 300.0};
}

inline Result socle_structure(const Options& opt) {
  Checker ck;
  const Element1 in = Element1::integral(), one = Element1::one();
  ck.expect(socle_level(ElementN::tensor({in, in})) == 2, "level(I (x) I) = 2");
  ck.expect(socle_level(ElementN::tensor({one, in})) == 1, "level(1 (x) I) = 1");
  ck.expect(socle_level(ElementN::tensor({Element1::e(0, 0), Element1::x()})) == 0, "level(e(0,0) (x) x) = 0");
  RandomSource rnd(opt.seed, detail::light_bounds());
  const std::size_t n = opt.count(1000);
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const ElementN a = rnd.elementN(2, 1);
    const ElementN u = rnd.weyl_word(2), v = rnd.weyl_word(2);
    const ElementN uav = u * a * v;
    if (uav.is_zero()) continue;
    ++nonzero;
    ck.expect(socle_level(uav) <= socle_level(a), "sample " + std::to_string(k) + ": " + to_text(a));
  }
  return {7, "socle structure (n = 2)", ck.ok(),
          ck.summary() + "; " + std::to_string(nonzero) + " nonzero products", 0, 60.0};
}

inline Result census_bound(const Options& opt) {
  Checker ck;
  const std::vector<Element1> reps = {Element1::one(), Element1::e(0, 0), Element1::integral()};
  ElementN all(2);
  for (const auto& p : reps)
    for (const auto& q : reps) all += ElementN::tensor({p, q});
  ck.expect(all.terms().size() == 9, "nine-term element");
  ck.expect(census(all).size() == 9, "all 3^2 labels realised");
  RandomSource rnd(opt.seed, detail::light_bounds());
  const std::size_t n = opt.count(200);
  for (std::size_t k = 0; k < n; ++k) {
    const ElementN a = rnd.elementN(2);
    const auto c = census(a);
    ck.expect(c.size() <= 9 && std::all_of(c.begin(), c.end(), [](const CensusLabel& l) { return l.size() == 2; }),
              "census of sample " + std::to_string(k));
  }
  return {8, "census bound (n = 2)", ck.ok(), ck.summary(), 0, 1.0};
}

inline Result kernel_witness(const Options&) {
  Checker ck;
  for (Index i = 0; i <= 6; ++i)
    for (Index j = 0; j <= 6; ++j)
      for (Index k = 0; k <= 6; ++k)
        for (Index jp = 0; jp <= 6; ++jp) {
          const auto w = kernel_witness_check(i, j, k, jp);
          const std::string tag = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                  std::to_string(jp);
          if (jp == j) ck.expect(w.annihilates, "annihilates " + tag);
          else ck.expect(w.off_diagonal, "off-diagonal nonzero " + tag);
        }
  return {9, "kernel of right multiplication by H1 - H2", ck.ok(), ck.summary(), 0, 5.0};
}

inline Result quotient_homomorphism(const Options& opt) {
  Checker ck;
  const std::size_t n = opt.count(200);
  RandomSource rnd1(opt.seed);
  for (std::size_t k = 0; k < n; ++k) {
    const Element1 a = rnd1.element1(), b = rnd1.element1();
    ck.expect(project_b1(a * b) == project_b1(a) * project_b1(b), "rank-1 pair " + std::to_string(k));
    ck.expect(project_b1(a).is_zero() == a.graded().empty(), "rank-1 kernel " + std::to_string(k));
    Element1 f;
    for (const auto& [st, c] : a.fpart()) f.add_e(st.first, st.second, c);
    ck.expect(project_b1(f).is_zero(), "F maps to zero " + std::to_string(k));
  }
  RandomSource rnd2(opt.seed + 1, detail::light_bounds());
  for (std::size_t k = 0; k < n; ++k) {
    const ElementN a = rnd2.elementN(2), b = rnd2.elementN(2);
    ck.expect(project_bn(a * b) == project_bn(a) * project_bn(b), "rank-2 pair " + std::to_string(k));
    ElementN pure(2);
    for (const auto& [key, c] : a.terms())
      if (std::none_of(key.begin(), key.end(), [](const BasisAtom1& at) { return at.is_eunit(); }))
        pure.add_term(key, c);
    ck.expect(project_bn(a) == project_bn(pure) && project_bn(pure).is_zero() == pure.is_zero(),
              "rank-2 kernel " + std::to_string(k));
  }
  ck.expect(!project_bn(h1_minus_h2()).is_zero(), "H1 - H2 not in the kernel");
  return {10, "quotient homomorphism", ck.ok(), ck.summary(), 0, 30.0};
}

inline Result split_round_trip(const Options& opt) {
  Checker ck;
  RandomSource rnd(opt.seed);
  const std::size_t n = opt.count(500), size = 24;
  for (std::size_t k = 0; k < n; ++k) {
    const Element1 a = rnd.element1(), b = rnd.element1();
    const SplitTriple s = split(a);
    const Element1 re = s.a_part + s.f_part + s.l_part;
    const std::string tag = "sample " + std::to_string(k);
    ck.expect(re == a, tag + " re-sum");
    ck.expect(in_a_span(s.a_part) && in_f_span(s.f_part) && in_l_span(s.l_part), tag + " spans");
    ck.expect(to_matrix(s.a_part, size) + to_matrix(s.f_part, size) + to_matrix(s.l_part, size) ==
                  to_matrix(a, size),
              tag + " matrix re-sum");
    ck.expect(consistent(re, b, size), tag + " oracle product");
  }
  return {11, "split round trip", ck.ok(), ck.summary(), 0, 60.0};
}

struct Criterion {
  int id;
  std::string_view suite;
  std::function<Result(const Options&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "relations", relations},          {2, "oracle", oracle_equivalence},
      {3, "oracle", matrix_unit_scaling},   {4, "dims", q_dimensions},
      {5, "holonomy", f_multiplicity},      {6, "holonomy", i1_multiplicity},
      {7, "socle", socle_structure},        {8, "socle", census_bound},
      {9, "kernel", kernel_witness},        {10, "kernel", quotient_homomorphism},
      {11, "oracle", split_round_trip},
  };
  return all;
}

inline bool is_suite(std::string_view s) {
  return s == "all" || std::any_of(criteria().begin(), criteria().end(),
                                   [s](const Criterion& c) { return c.suite == s; });
}

/// Runs one criterion and records its wall time.
inline Result run_timed(const Criterion& c, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = c.run(opt);
  } catch (const std::exception& e) {
    r = {c.id, "criterion " + std::to_string(c.id), false, std::string("exception: ") + e.what(), 0, 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string result_line(const Result& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s): "
     << r.detail;
  return os.str();
}

}  // namespace intdiff::verify

#endif  // INTDIFF_VERIFY_HPP

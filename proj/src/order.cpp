#include "biord/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace biord {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, assuming gcd(a, m) = 1 and m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return floor_mod(old_s, m);
}

std::map<KIndex, std::int64_t> abelianize_k(const KWord& w) {
  std::map<KIndex, std::int64_t> out;
  for (const auto& r : w.runs()) {
    auto& v = out[r.letter];
    v += r.exp;
    if (v == 0) out.erase(r.letter);
  }
  return out;
}

std::string format_vector(const std::map<KIndex, std::int64_t>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + format_kindex(k);
  }
  return s;
}

Decision decide_positive(const KWord& w, const OrderContext& ctx) {
  Decision d;
  d.cap_used = ctx.cap();
  if (w.is_identity()) {
    d.relation = Relation::Equal;
    return d;
  }
  std::vector<KIndex> letters;
  for (const auto& r : w.runs()) letters.push_back(r.letter);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::sort(letters.begin(), letters.end(), [&](const KIndex& a, const KIndex& b) {
    return ctx.index_key(a) < ctx.index_key(b);
  });
  std::vector<Run<int>> local;
  local.reserve(w.runs().size());
  for (const auto& r : w.runs()) {
    const auto pos = std::find(letters.begin(), letters.end(), r.letter) - letters.begin();
    local.push_back({static_cast<int>(pos), r.exp});
  }
  LeadingTensor t;
  try {
    t = leading_tensor(local, MagnusOptions{.cap = ctx.cap()});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DepthExceedsCap) throw;
    d.relation = Relation::Undecided;
    return d;
  }
  const auto& [mono, coef] = *t.coords.begin();
  d.depth = t.degree;
  d.coefficient = coef;
  for (int id : mono) d.minimal_index.push_back(letters[id]);
  d.relation = coef > 0 ? Relation::Less : Relation::Greater;
  return d;
}

}  // namespace

std::string format_kindex(const KIndex& k) {
  return "y" + std::to_string(k.generator) + "," + std::to_string(k.shift);
}

std::string format_kword(const KWord& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const auto& r : w.runs()) {
    if (!s.empty()) s += ' ';
    s += "y[" + std::to_string(r.letter.generator) + "," +
         std::to_string(r.letter.shift) + "]";
    if (r.exp != 1) s += "^" + std::to_string(r.exp);
  }
  return s;
}

OrbitData OrbitData::make(std::vector<int> tuple, std::vector<std::int64_t> h_values) {
  if (tuple.empty() || tuple.size() != h_values.size())
    throw Error(ErrorCode::Precondition, "orbit tuple and h-values must match");
  OrbitData o;
  o.tuple = std::move(tuple);
  o.h_values = std::move(h_values);
  o.offsets.assign(o.tuple.size(), 0);
  for (std::size_t m = 1; m < o.tuple.size(); ++m)
    o.offsets[m] = o.offsets[m - 1] - o.h_values[m - 1];
  o.h_sum = std::accumulate(o.h_values.begin(), o.h_values.end(), std::int64_t{0});
  return o;
}

bool OrbitData::coprime() const noexcept {
  return std::gcd(static_cast<std::int64_t>(size()), h_sum) == 1;
}

int OrbitData::position(int generator) const noexcept {
  auto it = std::find(tuple.begin(), tuple.end(), generator);
  return it == tuple.end() ? -1 : static_cast<int>(it - tuple.begin());
}

KIndex vindex_decode(const OrbitData& orbit, std::int64_t t) {
  if (!orbit.coprime())
    throw Error(ErrorCode::GcdViolation, "V-index needs gcd(|O|, h_O) = 1");
  const std::int64_t r = orbit.size();
  std::int64_t i = floor_mod(floor_mod(t, r) * mod_inverse(orbit.h_sum, r), r);
  if (i == 0) i = r;
  const std::int64_t j = (t - i * orbit.h_sum) / r - orbit.offsets[i - 1];
  return {orbit.tuple[i - 1], j};
}

std::int64_t vindex_encode(const OrbitData& orbit, const KIndex& index) {
  if (!orbit.coprime())
    throw Error(ErrorCode::GcdViolation, "V-index needs gcd(|O|, h_O) = 1");
  const int m = orbit.position(index.generator);
  if (m < 0)
    throw Error(ErrorCode::GeneratorNotInOrbit,
                "x" + std::to_string(index.generator) + " is not in the orbit");
  const std::int64_t r = orbit.size();
  return r * (orbit.offsets[m] + index.shift) + (m + 1) * orbit.h_sum;
}

OrderContext::OrderContext(ConjugacyForm form, int i0, int cap)
    : form_(std::move(form)), phi_(form_.rebuild()), i0_(i0), cap_(cap) {
  if (cap < 1) throw Error(ErrorCode::RangeViolation, "degree cap must be >= 1");
  certificate_ = certify(form_, i0_);
  std::vector<OrbitReport> reports = certificate_.reports;
  std::sort(reports.begin(), reports.end(),
            [](const OrbitReport& a, const OrbitReport& b) {
              return a.orbit.front() < b.orbit.front();
            });
  orbit_of_.assign(form_.rank + 1, -1);
  for (const auto& rep : reports) {
    for (int g : rep.orbit) orbit_of_[g] = static_cast<int>(orbits_.size());
    orbits_.push_back(OrbitData::make(rep.orbit, rep.h_values));
  }
}

OrderContext OrderContext::for_braid(const BraidWord& beta, int cap) {
  return for_endomorphism(artin_action(beta), cap);
}

OrderContext OrderContext::for_endomorphism(const Endomorphism& phi, int cap) {
  ConjugacyForm form = extract_conjugacy_form(phi);
  const int i0 = certify_all(form).i0;
  return OrderContext(std::move(form), i0, cap);
}

OrderContext OrderContext::with_cap(int cap) const {
  OrderContext c = *this;
  if (cap < 1) throw Error(ErrorCode::RangeViolation, "degree cap must be >= 1");
  c.cap_ = cap;
  return c;
}

std::pair<int, std::int64_t> OrderContext::index_key(const KIndex& k) const {
  if (k.generator < 1 || k.generator > form_.rank)
    throw Error(ErrorCode::IndexOutOfRange,
                "generator " + std::to_string(k.generator) + " out of range");
  const int slot = orbit_of_[k.generator];
  if (slot < 0)
    throw Error(ErrorCode::GeneratorNotInOrbit, "x_{i0} is not a letter of K");
  const OrbitData& o = orbits_[slot];
  if (o.coprime()) return {slot, vindex_encode(o, k)};
  return {slot, o.size() * k.shift + o.position(k.generator)};
}

KWord schreier_rewrite(const Word& w, int i0) {
  KWord out;
  std::int64_t m = 0;
  for (const auto& r : w.runs()) {
    if (r.letter == i0)
      m += r.exp;
    else
      out.push_back(KIndex{r.letter, m}, r.exp);
  }
  if (m != 0)
    throw Error(ErrorCode::HNonzero,
                "h(w) = " + std::to_string(m) + ", word is not in K");
  return out;
}

Word evaluate_kword(const KWord& w, int i0) {
  Word out;
  for (const auto& r : w.runs()) {
    out.push_back(i0, r.letter.shift);
    out.push_back(r.letter.generator, r.exp);
    out.push_back(i0, -r.letter.shift);
  }
  return out;
}

std::strong_ordering kindex_compare(const KIndex& a, const KIndex& b,
                                    const OrderContext& ctx) {
  return ctx.index_key(a) <=> ctx.index_key(b);
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "LESS";
    case Relation::Equal: return "EQUAL";
    case Relation::Greater: return "GREATER";
    case Relation::Undecided: return "UNDECIDED";
  }
  return "?";
}

Decision compare_in_K(const KWord& u, const KWord& v, const OrderContext& ctx) {
  return decide_positive(u.inverse() * v, ctx);
}

Decision compare_in_F(const Word& a, const Word& b, const OrderContext& ctx) {
  const Word w = a.inverse() * b;
  const std::int64_t d = exponent_sum(w, ctx.i0());
  if (d != 0) {
    Decision out;
    out.relation = d > 0 ? Relation::Less : Relation::Greater;
    out.h_difference = d;
    out.cap_used = ctx.cap();
    return out;
  }
  return decide_positive(schreier_rewrite(w, ctx.i0()), ctx);
}

TranslationReport translation_maps_check(const OrderContext& ctx, std::int64_t t_min,
                                         std::int64_t t_max) {
  if (!ctx.invariance_certified())
    throw Error(ErrorCode::GcdViolation, "translation maps need a BI certificate");
  const FreeGroup F(ctx.rank());
  const int i0 = ctx.i0();
  TranslationReport rep;
  auto mismatch = [&](std::string msg) {
    ++rep.mismatches;
    if (rep.details.size() < 8) rep.details.push_back(std::move(msg));
  };
  for (const OrbitData& o : ctx.orbits()) {
    for (std::int64_t t = t_min; t <= t_max; ++t) {
      const KIndex a = vindex_decode(o, t);
      const Word y = evaluate_kword(KWord::power(a, 1), i0);

      const auto phi_ab = abelianize_k(schreier_rewrite(F.apply(ctx.automorphism(), y), i0));
      const KIndex closed{ctx.form().sigma(a.generator),
                          a.shift + exponent_sum(ctx.form().conjugator(a.generator), i0)};
      const std::map<KIndex, std::int64_t> want_closed{{closed, 1}};
      const std::map<KIndex, std::int64_t> want_phi{{vindex_decode(o, t + o.h_sum), 1}};
      ++rep.checked;
      if (phi_ab != want_closed)
        mismatch("phi(" + format_kindex(a) + ") = " + format_vector(phi_ab) +
                 ", expected " + format_vector(want_closed));
      ++rep.checked;
      if (phi_ab != want_phi)
        mismatch("phi(V_" + std::to_string(t) + ") = " + format_vector(phi_ab) +
                 ", expected V_" + std::to_string(t + o.h_sum));

      const Word x = F.generator(i0);
      const auto psi_ab = abelianize_k(schreier_rewrite(x * y * x.inverse(), i0));
      const std::map<KIndex, std::int64_t> want_psi{{vindex_decode(o, t + o.size()), 1}};
      ++rep.checked;
      if (psi_ab != want_psi)
        mismatch("psi(V_" + std::to_string(t) + ") = " + format_vector(psi_ab) +
                 ", expected V_" + std::to_string(t + o.size()));
    }
  }
  return rep;
}

bool matrix_is_positively_triangular(const std::vector<std::vector<std::int64_t>>& m,
                                     std::span<const int> order) {
  const std::size_t n = order.size();
  if (m.size() != n)
    throw Error(ErrorCode::Precondition, "matrix size does not match order");
  for (const auto& row : m)
    if (row.size() != n)
      throw Error(ErrorCode::Precondition, "matrix must be square");
  for (std::size_t a = 0; a < n; ++a) {
    const auto& row = m.at(order[a]);
    if (row.at(order[a]) <= 0) return false;
    for (std::size_t b = 0; b < a; ++b)
      if (row.at(order[b]) != 0) return false;
  }
  return true;
}

}  // namespace biord

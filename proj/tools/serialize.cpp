#include "serialize.hpp"

namespace biord::cli {

Json to_json(const Certificate& c) {
  Json orbits = Json::array();
  for (const auto& r : c.reports)
    orbits.push_back({{"orbit", r.orbit},
                      {"h_values", r.h_values},
                      {"h_O", r.h_sum},
                      {"gcd", r.gcd}});
  return {{"i0", c.i0}, {"verdict", to_string(c.verdict)}, {"orbits", orbits}};
}

Json to_json(const OrderContext& ctx) {
  Json sigma = Json::array();
  Json conj = Json::array();
  for (int i = 1; i <= ctx.rank(); ++i) {
    sigma.push_back(ctx.form().sigma(i));
    conj.push_back(format_word(ctx.form().conjugator(i)));
  }
  Json orbits = Json::array();
  for (const auto& o : ctx.orbits())
    orbits.push_back({{"orbit", o.tuple},
                      {"h_values", o.h_values},
                      {"offsets", o.offsets},
                      {"h_O", o.h_sum}});
  return {{"rank", ctx.rank()},   {"i0", ctx.i0()},       {"cap", ctx.cap()},
          {"sigma", sigma},       {"conjugators", conj}, {"orbits", orbits}};
}

Json to_json(const CompletionResult& r) {
  return {{"alpha", format_braid(r.alpha)},
          {"product", format_braid(r.product)},
          {"steps", r.steps},
          {"certificate", to_json(r.certificate)}};
}

Json to_json(const Decision& d) {
  Json idx = Json::array();
  for (const auto& k : d.minimal_index) idx.push_back({k.generator, k.shift});
  return {{"relation", to_string(d.relation)},
          {"h_difference", d.h_difference},
          {"depth", d.depth},
          {"minimal_index", idx},
          {"coefficient", d.coefficient},
          {"cap", d.cap_used}};
}

}  // namespace biord::cli

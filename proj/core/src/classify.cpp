#include "primnorm/large_norm.hpp"
#include "primnorm/structure.hpp"

namespace primnorm {

Classification classify(const Group& g, const SamplingOptions& opts) {
  require_primitive(g, "classify");
  Classification c;
  c.order = g.order();
  c.small_bound = small_order_bound(g.degree());
  c.small = is_small(g);
  c.almost_simple = is_almost_simple(g);
  c.mathieu = is_mathieu_4transitive(g);
  c.candidates = large_parameters(g.degree());
  if (auto ctx = find_large_certificate(g, opts)) c.large = ctx->params;
  return c;
}

}  // namespace primnorm

#include "tropimp/commands.hpp"

#include "tropimp/fan.hpp"
#include "tropimp/implicitize.hpp"
#include "tropimp/poly_io.hpp"
#include "tropimp/pushforward.hpp"
#include "tropimp/reconstruct.hpp"
#include "tropimp/tropical_ci.hpp"

namespace tropimp {

namespace {

void check_format(const std::string& format) {
  if (format != "auto" && format != "fan" && format != "polytope")
    throw input_error("unknown --format value '" + format +
                      "' (expected fan, polytope or auto)");
}

std::string finish_fan(const WeightedFan& pushed, const CliOptions& opts,
                       bool with_degree) {
  const bool hypersurface = pushed.dim == pushed.ambient - 1;
  if (opts.format == "fan") return fan_to_string(pushed);
  if (opts.format == "polytope" && !hypersurface)
    throw computation_error(
        "the pushed fan has codimension != 1; no polytope to reconstruct");
  if (!hypersurface) return fan_to_string(pushed);
  Polytope newton = reconstruct_polytope(pushed, opts.threads);
  PolytopeWriteOptions w;
  w.with_degree = with_degree;
  return write_polytope(newton, w);
}

}  // namespace

std::string run_trci(const std::string& input_text, const CliOptions& opts) {
  check_format(opts.format);
  PolynomialSystem sys = parse_system(input_text);
  TropicalResult res = tropical_complete_intersection(sys, opts.threads);
  if (res.is_mixed_volume)
    return "MIXED_VOLUME\n" + res.mixed_volume_value.str() + "\n";
  return fan_to_string(res.fan);
}

std::string run_project(const std::string& fan_text, const std::string& matrix_text,
                        const CliOptions& opts) {
  check_format(opts.format);
  WeightedFan fan = fan_from_string(fan_text);
  MonomialMap map = parse_linear_map(matrix_text);
  WeightedFan pushed = push_forward(fan, map, opts.delta, opts.threads);
  return finish_fan(pushed, opts, /*with_degree=*/false);
}

std::string run_trim(const std::string& input_text, const CliOptions& opts) {
  check_format(opts.format);
  PolynomialSystem sys = parse_system(input_text);
  const int c = sys.num_polynomials();
  const int p = sys.num_variables();

  if (c == p + 1) {
    // Parametrization: run the full graph pipeline.
    if (opts.format == "fan") {
      GraphSystem graph = build_graph_system(sys);
      TropicalResult trop = tropical_complete_intersection(graph.system, opts.threads);
      WeightedFan pushed = push_forward(trop.fan, graph.map, opts.delta, opts.threads);
      return fan_to_string(pushed);
    }
    ImplicitizationResult res = implicitize(sys, opts.delta, opts.threads);
    PolytopeWriteOptions w;
    w.with_degree = true;
    return write_polytope(res.newton, w);
  }

  if (c < p) {
    // Already in graph form (unknowns carried as trailing variables, as when
    // a rational parametrization was cleared of denominators): eliminate the
    // leading p-c variables by projecting onto the last p-c+1 coordinates.
    TropicalResult trop = tropical_complete_intersection(sys, opts.threads);
    const int r = p - c + 1;
    MonomialMap map;
    map.matrix.assign(r, IVec(p, Int(0)));
    for (int i = 0; i < r; ++i) map.matrix[i][p - r + i] = 1;
    WeightedFan pushed = push_forward(trop.fan, map, opts.delta, opts.threads);
    if (pushed.dim != r - 1 && opts.format != "fan")
      throw computation_error("implicitization: the image is not a hypersurface");
    return finish_fan(pushed, opts, /*with_degree=*/true);
  }

  throw input_error(
      "trim expects a parametrization (n polynomials in n-1 variables) or a "
      "graph-form system (fewer polynomials than variables)");
}

}  // namespace tropimp

#pragma once

#include <string>
#include <vector>

#include "sec/graph.hpp"
#include "sec/recognition.hpp"

namespace sec {

/// Raised when a structural fact the case analysis relies on fails at
/// runtime.  Components with at most 40 edges fall back to the exact solver;
/// larger ones surface the error.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NotClawFreeError : std::runtime_error {
    explicit NotClawFreeError(const ClawWitness& w)
        : std::runtime_error("graph is not claw-free (center " + std::to_string(w.center) + ")"),
          witness(w) {}
    ClawWitness witness;
};

struct NotSubcubicError : std::runtime_error {
    NotSubcubicError(VertexId v, int deg)
        : std::runtime_error("graph is not subcubic (vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg) + ")"),
          vertex(v),
          degree(deg) {}
    VertexId vertex;
    int degree;
};

struct TraceStep {
    CaseTag tag;
    std::string note;
};

/// Outcome for one connected component.
struct ColoringResult {
    PartialColoring coloring;  // total over the component's edges
    int colors_used = 0;       // distinct colors
    bool exceptional = false;  // true only for a 3-prism component
    std::vector<TraceStep> trace;
};

struct ComponentRun {
    std::vector<VertexId> vertices;  // host-graph vertices, sorted
    ColoringResult result;
};

struct StrongColoring {
    PartialColoring coloring;  // total over the input graph
    int colors_used = 0;
    bool exceptional = false;  // some component is a 3-prism
    std::vector<ComponentRun> components;
};

/// Strong edge coloring of a claw-free subcubic graph: at most 7 colors per
/// component, except 3-prism components which get the forced 9 colors and an
/// exceptional flag.  Throws NotClawFreeError / NotSubcubicError on invalid
/// input; every returned coloring has been re-verified.
StrongColoring strong_color(const Graph& g);

/// Colors one connected component (not a 3-prism) with at most 7 colors,
/// dispatching on classify().
ColoringResult color_component(const Graph& g);

/// Terminal handler for the small fixed graphs: exact solve, at most 7
/// colors or the run is reported as an invariant violation.
ColoringResult small_case_solve(const Graph& g);

/// Applies a palette bijection to the listed edges only.  bijection[c] is
/// the image of color c; index 0 is ignored.
PartialColoring permute_colors(const PartialColoring& c, const std::vector<EdgeId>& edge_set,
                               const std::vector<int>& bijection);

// Case handlers, exposed for targeted tests.  Each expects the structural
// situation its name says and produces a verified result.
ColoringResult extend_degree1(const Graph& g, VertexId v0);
ColoringResult extend_degree2(const Graph& g, VertexId v0);
ColoringResult extend_cut_vertex(const Graph& g, VertexId v0);
ColoringResult extend_chorded_c4(const Graph& g, const FourCycle& c4);
ColoringResult extend_induced_c4(const Graph& g, const FourCycle& c4);
ColoringResult extend_even_cycle(const Graph& g);

}  // namespace sec

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "comax/graph.hpp"
#include "comax/ring.hpp"

namespace comax {

// Co-maximal graph on all of R: x -- y iff x != y and Rx + Ry = R.
Graph build_omega(const Ring& r);

// Elements outside U(R) ∪ J(R), ascending.
std::vector<Element> gamma_elements(const Ring& r);

// Subgraph of Ω(R) induced on R \ (U(R) ∪ J(R)).
Graph build_gamma(const Ring& r);

// Distinct principal ideals Rx of Γ-vertices x, adjacent iff Rx + Ry = R.
Graph build_gamma_r(const Ring& r);

// Element index -> vertex index for a graph labelled by ring elements, or -1.
std::vector<std::ptrdiff_t> element_positions(const Graph& g, std::size_t ring_size);

// S-signatures of the vertices of a graph labelled by ring elements or by
// principal ideals.
std::vector<SSignature> vertex_signatures(const Ring& r, const Graph& g);

// Ω(R) equals J(R) + U(R) + Γ(R) (discrete, complete, Γ) vertex-for-vertex
// and edge-for-edge.
bool decompose_omega(const Ring& r);
bool decompose_omega(const Ring& r, const Graph& omega, const Graph& gamma);

struct TwinCollapse {
  Graph graph;                          // one vertex per class
  std::vector<std::size_t> class_of;    // original vertex -> class
  std::vector<std::size_t> class_size;  // per class
  std::vector<std::size_t> representative;  // per class: least original vertex
};

// One vertex per distinct signature, adjacency = disjoint signatures. Throws
// InternalError if the graph does not match that description.
TwinCollapse collapse_false_twins(const Graph& g, std::span<const SSignature> signatures);
// Classes of nonadjacent vertices with identical neighbourhoods.
TwinCollapse collapse_false_twins(const Graph& g);

struct RetractCheck {
  Retraction retraction;                  // on the source graph
  std::vector<std::size_t> to_target;     // source vertex -> target graph vertex
  bool homomorphism = false;              // source -> target
  bool induced_isomorphic = false;        // source[representatives] ≅ target via to_target
  bool identity_on_representatives = false;
  bool holds() const { return homomorphism && induced_isomorphic && identity_on_representatives; }
};

// x ↦ Rx from Γ(R) onto Γ_r(R), with the least element of each class as
// its representative.
RetractCheck retraction_gamma_to_gamma_r(const Ring& r);
RetractCheck retraction_gamma_to_gamma_r(const Ring& r, const Graph& gamma, const Graph& gamma_r);

// Coset map Γ(R) -> Γ(R/I) for I ⊆ J(R), representatives = least coset members.
RetractCheck quotient_retract_check(const Ring& r, const Ideal& ideal);
RetractCheck quotient_retract_check(const Ring& r, const Ideal& ideal, const Graph& gamma);

}  // namespace comax

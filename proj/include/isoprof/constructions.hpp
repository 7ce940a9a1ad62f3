#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoprof/cheeger.hpp"
#include "isoprof/cuts.hpp"
#include "isoprof/graph.hpp"
#include "isoprof/groups.hpp"

namespace isoprof {

// Vertex set group^{[-r,r]} x [-(r+k), r+k], indexed by LampLayout.
Graph distorted_lamp_graph(const FiniteGroup& group, int k, int r);

struct CoarseningResult {
  Graph graph;                      // one vertex per block
  std::vector<std::size_t> anchoring;  // |internal boundary of the block| in the host
  std::size_t min_block = 0;
  std::size_t max_block = 0;
};

CoarseningResult coarsen(const Graph& g, const ConnectedPartition& partition);

// Greedy scan: keeps a vertex iff it is at distance >= b from every kept vertex.
// An empty scan order means 0..n-1.
VertexSubset maximal_b_separated(const Graph& g, int b, const std::vector<Vertex>& scan_order = {});
bool is_b_separated(const Graph& g, const VertexSubset& s, int b);

// Graph on the members of s (in increasing order), adjacent iff host distance < 2b.
Graph b_rescaling(const Graph& g, const VertexSubset& s, int b);

struct DiscretizationResult {
  std::vector<Vertex> centers;
  ConnectedPartition partition;  // block i belongs to centers[i]
  std::vector<double> nu;        // aggregated counting measure per center
  std::vector<int> inner_radius;  // largest rho with B(y, rho) inside the block
  std::vector<int> outer_radius;  // smallest rho with the block inside B(y, rho)
  bool b_inclusion = false;       // every inner radius >= b
  bool outer_within_2b = false;   // every outer radius <= 2b

  // Centers with the host metric and the aggregated measure.
  WeightedMetricGraph metric(const Graph& host) const;
};

// Voronoi assignment to the members of s; ties go to the smallest center.
DiscretizationResult scale_b_partition(const Graph& g, const VertexSubset& s, int b);

struct TransferResult {
  Graph image;                  // union of chosen geodesics in X
  std::vector<Vertex> image_vertices;  // X vertex of each image vertex
  CutResult image_cut;          // cut of the image graph
  CutResult cut;                // pulled-back set on the source graph
  bool valid = false;           // cut is an s-cut of the source
  double achieved = 0.0;        // largest remaining component / |V|
  std::size_t ball_multiplicity = 0;  // max preimage size of a radius-kappa ball in X
};

// f maps source vertices to X vertices; every source edge must map to points
// at X-distance <= kappa.
TransferResult bilip_cut_transfer(const Graph& source, const Graph& x, const std::vector<Vertex>& f, int kappa,
                                  const Rational& s, CutMode mode, const CutOptions& options = {});

}  // namespace isoprof

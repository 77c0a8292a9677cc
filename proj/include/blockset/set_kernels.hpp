#pragma once

#include <cstddef>
#include <vector>

#include "blockset/vertex_set.hpp"

// Scans over arrays of vertex sets. Every kernel has a scalar reference and an
// AVX2 variant; the public entry points dispatch at runtime.
namespace blockset::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend chosen by the public entry points.
Backend active_backend();
bool avx2_available();
/// Forces a backend (tests). Requesting Avx2 on a CPU without it throws.
void set_backend(Backend b);
/// Restores CPU-based selection.
void reset_backend();

/// True iff every set in `sets` intersects `s`.
bool hits_all(const std::vector<VertexSet>& sets, const VertexSet& s);
/// True iff some set in `sets` is a subset of `s`.
bool any_subset_of(const std::vector<VertexSet>& sets, const VertexSet& s);
/// True iff some set E in `sets` satisfies E ∩ s == {v}.
bool has_private_edge(const std::vector<VertexSet>& sets, const VertexSet& s, Vertex v);
/// Index of the first set disjoint from `s`, or -1.
int first_disjoint(const std::vector<VertexSet>& sets, const VertexSet& s);

namespace scalar {
bool hits_all(const VertexSet* sets, std::size_t n, const VertexSet& s);
bool any_subset_of(const VertexSet* sets, std::size_t n, const VertexSet& s);
bool has_private_edge(const VertexSet* sets, std::size_t n, const VertexSet& s, Vertex v);
int first_disjoint(const VertexSet* sets, std::size_t n, const VertexSet& s);
}  // namespace scalar

namespace avx2 {
bool hits_all(const VertexSet* sets, std::size_t n, const VertexSet& s);
bool any_subset_of(const VertexSet* sets, std::size_t n, const VertexSet& s);
bool has_private_edge(const VertexSet* sets, std::size_t n, const VertexSet& s, Vertex v);
int first_disjoint(const VertexSet* sets, std::size_t n, const VertexSet& s);
}  // namespace avx2

}  // namespace blockset::kernels

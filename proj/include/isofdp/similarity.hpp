#pragma once

#include "isofdp/graph.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

namespace isofdp {

/// Stands for "no path": the distance assigned to zero similarity.
inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

enum class Measure { Structure, Euclidean, Jaccard, Cosine, Hamming };

/// Accepts "structure", "euclidean", "jaccard", "cosine", "hamming".
Measure parse_measure(std::string_view tag);
std::string_view measure_name(Measure m);

struct SimilarityMatrix {
    Eigen::MatrixXd values;
    Measure measure = Measure::Structure;
};

struct DistanceMatrix {
    Eigen::MatrixXd values;  // kInfiniteDistance marks unreachable pairs
};

/// |N(v) ∩ N(w)| / sqrt(|N(v)| |N(w)|) over closed neighborhoods N(x) = {x} ∪ adj(x).
double structure_similarity(const Graph& g, NodeId v, NodeId w);

/// Dense pairwise similarity. Structure similarity is the default measure.
/// The alternates work on adjacency rows; Euclidean and Hamming are
/// distances and come back as 1 / (1 + d). Hamming is the fraction of
/// differing positions. Diagonal is 1 for every measure.
SimilarityMatrix similarity_matrix(const Graph& g, Measure measure = Measure::Structure,
                                   std::size_t workers = 1);

/// d_ij = 1 / s_ij off the diagonal, 0 on it; s = 0 gives kInfiniteDistance.
DistanceMatrix to_distance(const SimilarityMatrix& s);

/// Row-major CSV without header; infinite entries are written as `inf`.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

}  // namespace isofdp

#include "isofdp/similarity.hpp"

#include "isofdp/errors.hpp"
#include "isofdp/parallel.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace isofdp {

namespace {

// Size of the intersection of two sorted ranges.
template <class A, class B>
std::size_t intersection_size(const A& a, const B& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

void check_node(const Graph& g, NodeId v) {
    if (v >= g.node_count())
        throw DomainError("node index " + std::to_string(v) + " out of range for n = " +
                          std::to_string(g.node_count()));
}

// Closed-neighborhood overlap: adjacency overlap plus the contributions of
// v and w themselves.
std::size_t closed_overlap(const Graph& g, NodeId v, NodeId w) {
    if (v == w) return g.degree(v) + 1;
    std::size_t common = intersection_size(g.neighbors(v), g.neighbors(w));
    if (g.has_edge(v, w)) common += 2;  // w ∈ N(v) and v ∈ N(w)
    return common;
}

double pair_similarity(const Graph& g, Measure measure, NodeId v, NodeId w) {
    const double dv = static_cast<double>(g.degree(v));
    const double dw = static_cast<double>(g.degree(w));
    switch (measure) {
        case Measure::Structure:
            return static_cast<double>(closed_overlap(g, v, w)) / std::sqrt((dv + 1) * (dw + 1));
        case Measure::Jaccard: {
            const double common = static_cast<double>(intersection_size(g.neighbors(v), g.neighbors(w)));
            const double uni = dv + dw - common;
            return uni > 0 ? common / uni : 0.0;
        }
        case Measure::Cosine: {
            const double common = static_cast<double>(intersection_size(g.neighbors(v), g.neighbors(w)));
            return dv > 0 && dw > 0 ? common / std::sqrt(dv * dw) : 0.0;
        }
        case Measure::Euclidean:
        case Measure::Hamming: {
            const double common = static_cast<double>(intersection_size(g.neighbors(v), g.neighbors(w)));
            const double differing = dv + dw - 2 * common;
            const double d = measure == Measure::Euclidean
                                 ? std::sqrt(differing)
                                 : differing / static_cast<double>(g.node_count());
            return 1.0 / (1.0 + d);
        }
    }
    return 0.0;
}

}  // namespace

Measure parse_measure(std::string_view tag) {
    if (tag == "structure") return Measure::Structure;
    if (tag == "euclidean") return Measure::Euclidean;
    if (tag == "jaccard") return Measure::Jaccard;
    if (tag == "cosine") return Measure::Cosine;
    if (tag == "hamming") return Measure::Hamming;
    throw DomainError("unknown similarity measure '" + std::string(tag) + "'");
}

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::Structure: return "structure";
        case Measure::Euclidean: return "euclidean";
        case Measure::Jaccard: return "jaccard";
        case Measure::Cosine: return "cosine";
        case Measure::Hamming: return "hamming";
    }
    return "unknown";
}

double structure_similarity(const Graph& g, NodeId v, NodeId w) {
    check_node(g, v);
    check_node(g, w);
    return pair_similarity(g, Measure::Structure, v, w);
}

SimilarityMatrix similarity_matrix(const Graph& g, Measure measure, std::size_t workers) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    SimilarityMatrix out{Eigen::MatrixXd::Identity(n, n), measure};
    // Row v fills the upper triangle (v, w > v); mirrored afterwards.
    parallel_for(g.node_count(), workers, [&](std::size_t v) {
        for (NodeId w = v + 1; w < g.node_count(); ++w)
            out.values(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) =
                pair_similarity(g, measure, v, w);
    });
    out.values.triangularView<Eigen::StrictlyLower>() =
        out.values.transpose().triangularView<Eigen::StrictlyLower>();
    return out;
}

DistanceMatrix to_distance(const SimilarityMatrix& s) {
    const Eigen::Index n = s.values.rows();
    if (s.values.cols() != n) throw DomainError("similarity matrix must be square");
    DistanceMatrix d{Eigen::MatrixXd::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = s.values(i, j);
            if (v < 0 || std::isnan(v))
                throw DomainError("negative similarity at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
            if (i == j) continue;
            d.values(i, j) = v == 0 ? kInfiniteDistance : 1.0 / v;
        }
    }
    return d;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    const auto old_precision = out.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            if (std::isinf(m(i, j)))
                out << "inf";
            else
                out << m(i, j);
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace isofdp

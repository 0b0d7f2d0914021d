#include "swapkit/chain.hpp"

#include <algorithm>
#include <cmath>

#include "swapkit/hadamard.hpp"

namespace swapkit {

namespace {

constexpr double kOrderTol = 1e-7;

// Validates the contiguity invariant: in-order leaves must be lo, lo+1, ...
// Returns one past the largest leaf.
int check_contiguous(const FusionTree& t, int lo) {
    if (t.is_leaf()) {
        if (t.leaf_index() != lo) throw StructureError("fusion tree leaves must be 0,1,... in order");
        return lo + 1;
    }
    return check_contiguous(t.right(), check_contiguous(t.left(), lo));
}

}  // namespace

FusionTree FusionTree::leaf(int index) {
    if (index < 0) throw DomainError("leaf index must be nonnegative");
    auto n = std::make_shared<Node>();
    n->leaf = index;
    return FusionTree(std::move(n));
}

FusionTree FusionTree::node(FusionTree left, FusionTree right) {
    auto n = std::make_shared<Node>();
    n->l = left.node_;
    n->r = right.node_;
    return FusionTree(std::move(n));
}

FusionTree FusionTree::left() const {
    if (is_leaf()) throw StructureError("leaf has no children");
    return FusionTree(node_->l);
}

FusionTree FusionTree::right() const {
    if (is_leaf()) throw StructureError("leaf has no children");
    return FusionTree(node_->r);
}

int FusionTree::leaf_count() const {
    if (is_leaf()) return 1;
    FusionTree l(node_->l), r(node_->r);
    return l.leaf_count() + r.leaf_count();
}

int FusionTree::first_leaf() const {
    const Node* n = node_.get();
    while (n->leaf < 0) n = n->l.get();
    return n->leaf;
}

std::string FusionTree::str() const {
    if (is_leaf()) return std::to_string(leaf_index());
    FusionTree l(node_->l), r(node_->r);
    return "(" + l.str() + "." + r.str() + ")";
}

namespace {

FusionTree parse_tree(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw UsageError("fusion tree string ended unexpectedly");
    if (s[pos] == '(') {
        ++pos;
        FusionTree l = parse_tree(s, pos);
        if (pos >= s.size() || s[pos] != '.')
            throw UsageError("fusion tree: expected '.' between subtrees");
        ++pos;
        FusionTree r = parse_tree(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw UsageError("fusion tree: expected ')'");
        ++pos;
        return FusionTree::node(std::move(l), std::move(r));
    }
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
        throw UsageError("fusion tree: expected a leaf index");
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return FusionTree::leaf(std::stoi(s.substr(start, pos - start)));
}

}  // namespace

FusionTree FusionTree::parse(const std::string& text) {
    std::size_t pos = 0;
    FusionTree t = parse_tree(text, pos);
    if (pos != text.size()) throw UsageError("fusion tree: trailing characters");
    check_contiguous(t, t.first_leaf());
    if (t.first_leaf() != 0) throw StructureError("fusion tree must start at leaf 0");
    return t;
}

FusionTree FusionTree::left_associated(int leaf_count) {
    if (leaf_count < 1) throw DomainError("leaf count must be positive");
    FusionTree t = leaf(0);
    for (int i = 1; i < leaf_count; ++i) t = node(std::move(t), leaf(i));
    return t;
}

namespace {

std::vector<FusionTree> enumerate_range(int lo, int hi) {
    std::vector<FusionTree> out;
    if (hi - lo == 1) {
        out.push_back(FusionTree::leaf(lo));
        return out;
    }
    for (int split = lo + 1; split < hi; ++split) {
        for (const auto& l : enumerate_range(lo, split))
            for (const auto& r : enumerate_range(split, hi))
                out.push_back(FusionTree::node(l, r));
    }
    return out;
}

}  // namespace

std::vector<FusionTree> FusionTree::enumerate(int leaf_count) {
    if (leaf_count < 1) throw DomainError("leaf count must be positive");
    return enumerate_range(0, leaf_count);
}

DiagonalSpectrum fuse(const DiagonalSpectrum& j, const DiagonalSpectrum& k) {
    const int d = j.dim();
    if (k.dim() != d) throw DimensionError("fuse: spectra dimensions differ");
    const ComplexMatrix f = fourier(d).to_unitary();
    const ComplexMatrix jfk = j.to_matrix() * f * k.to_matrix();
    std::vector<double> sv = singular_values(jfk);
    double ss = 0.0;
    for (double& s : sv) {
        s *= std::sqrt(static_cast<double>(d));
        ss += s * s;
    }
    // √d·sv(JFK) already has unit norm; renormalize the rounding residue.
    const double scale = 1.0 / std::sqrt(ss);
    for (double& s : sv) s *= scale;
    return DiagonalSpectrum::from_schmidt(std::move(sv));
}

namespace {

DiagonalSpectrum evaluate_node(const FusionTree& t, const std::vector<DiagonalSpectrum>& links,
                               std::vector<double>& per_node_g) {
    if (t.is_leaf()) return links[static_cast<std::size_t>(t.leaf_index())];
    const DiagonalSpectrum l = evaluate_node(t.left(), links, per_node_g);
    const DiagonalSpectrum r = evaluate_node(t.right(), links, per_node_g);
    DiagonalSpectrum fused = fuse(l, r);
    per_node_g.push_back(fused.g_concurrence());
    return fused;
}

}  // namespace

ChainResult evaluate_chain(const std::vector<DiagonalSpectrum>& links, const FusionTree& tree) {
    if (links.size() < 2) throw StructureError("a chain needs at least 2 links");
    const int d = links.front().dim();
    for (const auto& link : links)
        if (link.dim() != d) throw DimensionError("links must share dimension");
    if (tree.leaf_count() != static_cast<int>(links.size()))
        throw StructureError("fusion tree leaf count must match the link count");
    check_contiguous(tree, 0);

    std::vector<double> per_node_g;
    DiagonalSpectrum final = evaluate_node(tree, links, per_node_g);
    return ChainResult{std::move(final), std::move(per_node_g), tree};
}

OrderIndependenceReport order_independence_check(int dim, int num_links, int trials,
                                                 std::uint64_t seed) {
    if (dim < 2) throw DomainError("order_independence_check requires dim >= 2");
    if (num_links < 3) throw DomainError("order independence needs at least 3 links");
    if (num_links > 6) throw SizeError("num_links capped at 6 (Catalan growth)");
    if (trials < 1) throw DomainError("trials must be positive");

    const std::vector<FusionTree> trees = FusionTree::enumerate(num_links);
    Rng rng(seed);

    OrderIndependenceReport report;
    for (int t = 0; t < trials; ++t) {
        std::vector<DiagonalSpectrum> links;
        links.reserve(static_cast<std::size_t>(num_links));
        for (int l = 0; l < num_links; ++l)
            links.push_back(random_full_rank_spectrum(dim, rng));

        std::vector<DiagonalSpectrum> finals;
        finals.reserve(trees.size());
        for (const auto& tree : trees)
            finals.push_back(evaluate_chain(links, tree).final);

        for (std::size_t i = 0; i < finals.size(); ++i)
            for (std::size_t j = i + 1; j < finals.size(); ++j) {
                const double disc = finals[i].max_abs_diff(finals[j]);
                if (disc > report.max_discrepancy) {
                    report.max_discrepancy = disc;
                    if (disc >= kOrderTol && !report.witness)
                        report.witness = OrderIndependenceWitness{
                            links, trees[i], trees[j], finals[i], finals[j], disc};
                }
            }
    }
    report.holds = report.max_discrepancy < kOrderTol;
    return report;
}

}  // namespace swapkit

#include "schurweyl/operator_expr.hpp"

#include "schurweyl/error.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace schurweyl {

struct OperatorExpr::Node {
    struct PermSum {
        std::vector<Term> terms;
        std::vector<double> weights; // terms[i].coefficient as double
    };
    struct Product {
        std::vector<OperatorExpr> factors;
    };
    struct Sum {
        std::vector<OperatorExpr> terms;
    };
    struct Scaled {
        double weight;
        OperatorExpr operand;
    };
    struct Embedded {
        OperatorExpr operand;
        int offset;
    };

    int arity;
    std::variant<PermSum, Product, Sum, Scaled, Embedded> body;
};

struct OperatorExprAccess {
    static const OperatorExpr::Node &node(const OperatorExpr &op) { return *op.node_; }
    static OperatorExpr make(OperatorExpr::Node node) {
        return OperatorExpr(std::make_shared<const OperatorExpr::Node>(std::move(node)));
    }
};

namespace {

using Node = OperatorExpr::Node;
using Buffer = Eigen::VectorXcd;

Buffer apply_node(const Node &node, const Buffer &in, int local_dim, int n_state, int offset);

// Visitor applying one node kind; the node's factor 1 sits at state factor offset+1.
struct Applier {
    const Buffer &in;
    int local_dim;
    int n_state;
    int offset;
    int arity;

    Buffer operator()(const Node::PermSum &p) const {
        Buffer out = Buffer::Zero(in.size());
        const std::span<const Complex> src(in.data(), static_cast<std::size_t>(in.size()));
        const std::span<Complex> dst(out.data(), static_cast<std::size_t>(out.size()));
        for (std::size_t i = 0; i < p.terms.size(); ++i) {
            const auto &perm = p.terms[i].permutation;
            if (offset == 0 && n_state == arity)
                accumulate_permuted(perm, local_dim, src, dst, p.weights[i]);
            else
                accumulate_permuted(perm.embedded(n_state, offset), local_dim, src, dst, p.weights[i]);
        }
        return out;
    }

    Buffer operator()(const Node::Product &p) const {
        Buffer v = in;
        for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
            v = apply_node(OperatorExprAccess::node(*it), v, local_dim, n_state, offset);
        return v;
    }

    Buffer operator()(const Node::Sum &s) const {
        Buffer out = Buffer::Zero(in.size());
        for (const auto &term : s.terms)
            out += apply_node(OperatorExprAccess::node(term), in, local_dim, n_state, offset);
        return out;
    }

    Buffer operator()(const Node::Scaled &s) const {
        return s.weight * apply_node(OperatorExprAccess::node(s.operand), in, local_dim, n_state, offset);
    }

    Buffer operator()(const Node::Embedded &e) const {
        return apply_node(OperatorExprAccess::node(e.operand), in, local_dim, n_state, offset + e.offset);
    }
};

Buffer apply_node(const Node &node, const Buffer &in, int local_dim, int n_state, int offset) {
    return std::visit(Applier{in, local_dim, n_state, offset, node.arity}, node.body);
}

void collect_support(const Node &node, int offset, std::set<int> &out) {
    std::visit(
        [&](const auto &body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Node::PermSum>) {
                for (const auto &term : body.terms)
                    for (int p = 1; p <= term.permutation.size(); ++p)
                        if (term.permutation(p) != p)
                            out.insert(offset + p);
            } else if constexpr (std::is_same_v<T, Node::Product>) {
                for (const auto &f : body.factors)
                    collect_support(OperatorExprAccess::node(f), offset, out);
            } else if constexpr (std::is_same_v<T, Node::Sum>) {
                for (const auto &f : body.terms)
                    collect_support(OperatorExprAccess::node(f), offset, out);
            } else if constexpr (std::is_same_v<T, Node::Scaled>) {
                collect_support(OperatorExprAccess::node(body.operand), offset, out);
            } else {
                collect_support(OperatorExprAccess::node(body.operand), offset + body.offset, out);
            }
        },
        node.body);
}

} // namespace

OperatorExpr OperatorExpr::identity(int n) {
    return permutation_sum(n, {Term{Rational(1), Permutation(n)}});
}

OperatorExpr OperatorExpr::permutation_sum(int n, std::vector<Term> terms) {
    Node::PermSum body;
    for (auto &term : terms) {
        if (term.permutation.size() != n)
            throw InvalidArgument("permutation size does not match operator arity");
        term.coefficient.canonicalize();
        body.weights.push_back(term.coefficient.get_d());
    }
    body.terms = std::move(terms);
    return OperatorExprAccess::make(Node{n, std::move(body)});
}

OperatorExpr OperatorExpr::product(std::vector<OperatorExpr> factors) {
    if (factors.empty())
        throw InvalidArgument("empty operator product");
    const int n = factors.front().arity();
    for (const auto &f : factors)
        if (f.arity() != n)
            throw InvalidArgument("operator product of mismatched arities");
    return OperatorExprAccess::make(Node{n, Node::Product{std::move(factors)}});
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
    if (terms.empty())
        throw InvalidArgument("empty operator sum");
    const int n = terms.front().arity();
    for (const auto &t : terms)
        if (t.arity() != n)
            throw InvalidArgument("operator sum of mismatched arities");
    return OperatorExprAccess::make(Node{n, Node::Sum{std::move(terms)}});
}

OperatorExpr OperatorExpr::scaled(const Rational &c) const {
    return OperatorExprAccess::make(Node{arity(), Node::Scaled{c.get_d(), *this}});
}

OperatorExpr OperatorExpr::embedded(int n, int offset) const {
    if (offset < 0 || offset + arity() > n)
        throw InvalidArgument("embedding does not fit");
    if (offset == 0 && n == arity())
        return *this;
    return OperatorExprAccess::make(Node{n, Node::Embedded{*this, offset}});
}

int OperatorExpr::arity() const { return node_->arity; }

std::vector<int> OperatorExpr::support() const {
    std::set<int> out;
    collect_support(*node_, 0, out);
    return {out.begin(), out.end()};
}

TensorState OperatorExpr::apply(const TensorState &psi) const {
    if (psi.n_factors() != arity())
        throw InvalidArgument("operator arity " + std::to_string(arity()) + " does not match state with " +
                              std::to_string(psi.n_factors()) + " factors");
    return TensorState(psi.local_dim(), psi.n_factors(),
                       apply_node(*node_, psi.amplitudes(), psi.local_dim(), psi.n_factors(), 0));
}

Complex OperatorExpr::expectation(const TensorState &psi) const { return psi.inner(apply(psi)); }

Eigen::MatrixXcd OperatorExpr::dense_matrix(int local_dim) const {
    const auto dim = checked_dimension(local_dim, arity());
    Eigen::MatrixXcd m(dim, dim);
    for (std::int64_t c = 0; c < dim; ++c)
        m.col(c) = apply(TensorState::basis_index(local_dim, arity(), c)).amplitudes();
    return m;
}

OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b) { return OperatorExpr::product({a, b}); }

} // namespace schurweyl

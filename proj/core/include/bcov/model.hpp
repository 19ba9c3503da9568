#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcov/linalg.hpp"
#include "bcov/scalar.hpp"

namespace bcov {

struct GradedBasisElement {
    std::string id;
    int degree = 0;
    std::optional<std::pair<int, int>> bidegree;
};

// Sparse element of the model's underlying vector space: basis index -> coeff,
// zero coefficients never stored.
struct GradedElement {
    std::map<int, Scalar> c;

    bool is_zero() const { return c.empty(); }
    void add(int idx, const Scalar& v);
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    GradedElement scaled(const Scalar& s) const;
    friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.c == b.c; }
};

// Finite-dimensional dGBV algebra with trace over Q or Q(i). Immutable after
// load; every operation is pure and safe to share across threads.
class DGBVModel {
public:
    // Parses and validates; throws ParseError / AxiomError.
    static DGBVModel load(const std::string& json_text);
    static DGBVModel load_file(const std::string& path);

    const std::string& name() const { return name_; }
    const std::string& field() const { return field_; }
    int cy_dimension() const { return dim_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<GradedBasisElement>& basis() const { return basis_; }
    int unit_index() const { return unit_; }
    bool has_bidegrees() const { return has_bidegrees_; }

    int index_of(const std::string& id) const;
    int degree(int i) const { return basis_[i].degree; }
    int parity(int i) const { return ((basis_[i].degree % 2) + 2) % 2; }
    int parity_of(const GradedElement& e) const;  // -1 if mixed

    const Mat& d_op() const { return d_; }
    const Mat& del_op() const { return del_; }
    const Mat& inner_product() const { return h_; }
    const std::vector<Scalar>& trace_vector() const { return tr_; }
    // Gram matrix of the trace pairing g_{ab} = Tr(e_a e_b).
    const Mat& trace_gram() const { return gram_; }

    GradedElement basis_element(int i) const;
    const GradedElement& product(int a, int b) const { return prod_[a][b]; }

    GradedElement multiply(const GradedElement& a, const GradedElement& b) const;
    // {a,b} = del(ab) - (del a)b - (-1)^{|a|} a (del b), extended bilinearly
    // over homogeneous-degree components of a.
    GradedElement bracket(const GradedElement& a, const GradedElement& b) const;
    Scalar trace(const GradedElement& a) const;
    GradedElement apply(const Mat& op, const GradedElement& a) const;

    // Canonical serialization; load(serialize()) reproduces the model exactly.
    std::string serialize() const;
    uint64_t content_hash() const;

    // Re-runs the axiom suite (used by mutation tests); throws AxiomError.
    void validate() const;

    // Zoo construction path: assembles a model from parts, then validates.
    struct Raw {
        std::string name;
        std::string field = "Q";
        int dimension = 0;
        std::vector<GradedBasisElement> basis;
        std::string unit;
        // ordered triples (a,b,c) -> coeff of e_c in e_a * e_b
        std::vector<std::tuple<std::string, std::string, std::string, Scalar>> product;
        std::vector<std::tuple<std::string, std::string, Scalar>> d, del, trace;
        std::vector<std::tuple<std::string, std::string, Scalar>> inner_product;
    };
    static DGBVModel from_raw(const Raw& raw);

private:
    DGBVModel() = default;
    void finish_and_validate();

    std::string name_, field_;
    int dim_ = 0;
    int unit_ = -1;
    bool has_bidegrees_ = false;
    bool has_custom_h_ = false;
    std::vector<GradedBasisElement> basis_;
    std::map<std::string, int> index_;
    std::vector<std::vector<GradedElement>> prod_;
    Mat d_, del_, h_;
    std::vector<Scalar> tr_;
    Mat gram_;
};

}  // namespace bcov

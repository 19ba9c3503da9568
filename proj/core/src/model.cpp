#include "bcov/model.hpp"

#include <fstream>
#include <sstream>

#include "bcov/errors.hpp"
#include "json.hpp"

namespace bcov {

using ordered_json = nlohmann::ordered_json;

void GradedElement::add(int idx, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = c.find(idx);
    if (it == c.end()) {
        c.emplace(idx, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    for (const auto& [i, v] : o.c) add(i, v);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
    for (const auto& [i, v] : o.c) add(i, -v);
    return *this;
}

GradedElement GradedElement::scaled(const Scalar& s) const {
    GradedElement out;
    if (s.is_zero()) return out;
    for (const auto& [i, v] : c) out.c.emplace(i, v * s);
    return out;
}

int DGBVModel::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ParseError("unknown basis id '" + id + "'");
    return it->second;
}

int DGBVModel::parity_of(const GradedElement& e) const {
    int p = -1;
    for (const auto& [i, v] : e.c) {
        if (p < 0)
            p = parity(i);
        else if (p != parity(i))
            return -1;
    }
    return p < 0 ? 0 : p;
}

GradedElement DGBVModel::basis_element(int i) const {
    GradedElement e;
    e.add(i, Scalar(1));
    return e;
}

GradedElement DGBVModel::multiply(const GradedElement& a, const GradedElement& b) const {
    GradedElement out;
    const int n = size();
    for (const auto& [i, x] : a.c) {
        if (i >= n) throw ModelMismatch("element index out of range");
        for (const auto& [j, y] : b.c) {
            if (j >= n) throw ModelMismatch("element index out of range");
            const GradedElement& p = prod_[i][j];
            Scalar xy = x * y;
            for (const auto& [k, z] : p.c) out.add(k, xy * z);
        }
    }
    return out;
}

GradedElement DGBVModel::apply(const Mat& op, const GradedElement& a) const {
    GradedElement out;
    for (const auto& [j, v] : a.c)
        for (int i = 0; i < op.rows(); ++i)
            if (!op.at(i, j).is_zero()) out.add(i, op.at(i, j) * v);
    return out;
}

GradedElement DGBVModel::bracket(const GradedElement& a, const GradedElement& b) const {
    // split a into parity-homogeneous parts; the Koszul sign only sees parity
    GradedElement even, odd;
    for (const auto& [i, v] : a.c) (parity(i) == 0 ? even : odd).add(i, v);
    GradedElement out;
    for (int p = 0; p < 2; ++p) {
        const GradedElement& part = (p == 0) ? even : odd;
        if (part.is_zero()) continue;
        GradedElement t = apply(del_, multiply(part, b));
        t -= multiply(apply(del_, part), b);
        GradedElement last = multiply(part, apply(del_, b));
        if (p == 0)
            t -= last;
        else
            t += last;
        out += t;
    }
    return out;
}

Scalar DGBVModel::trace(const GradedElement& a) const {
    Scalar s;
    for (const auto& [i, v] : a.c) {
        if (i >= size()) throw ModelMismatch("element index out of range");
        if (!tr_[i].is_zero()) s += tr_[i] * v;
    }
    return s;
}

namespace {

std::string witness(const DGBVModel& m, std::initializer_list<int> idx) {
    std::string out;
    for (int i : idx) {
        if (!out.empty()) out += ",";
        out += m.basis()[i].id;
    }
    return out;
}

Scalar sign_of_parity(int p) { return p % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

void DGBVModel::validate() const {
    const int n = size();

    // unit
    if (unit_ < 0) throw AxiomError("unit", "missing");
    if (degree(unit_) != 0) throw AxiomError("unit", basis_[unit_].id + " has nonzero degree");
    for (int a = 0; a < n; ++a) {
        if (!(prod_[unit_][a] == basis_element(a)) || !(prod_[a][unit_] == basis_element(a)))
            throw AxiomError("unit", witness(*this, {a}));
    }

    // graded commutativity
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            GradedElement rhs = prod_[b][a].scaled(sign_of_parity(parity(a) * parity(b)));
            if (!(prod_[a][b] == rhs)) throw AxiomError("graded-commutativity", witness(*this, {a, b}));
        }

    // product degree additivity (also pins the sparse table's shape)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [k, v] : prod_[a][b].c) {
                if (degree(k) != degree(a) + degree(b))
                    throw AxiomError("product-degree", witness(*this, {a, b, k}));
                if (has_bidegrees_) {
                    auto [ia, ja] = *basis_[a].bidegree;
                    auto [ib, jb] = *basis_[b].bidegree;
                    auto [ik, jk] = *basis_[k].bidegree;
                    if (ik != ia + ib || jk != ja + jb)
                        throw AxiomError("product-bidegree", witness(*this, {a, b, k}));
                }
            }

    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const GradedElement& ab = prod_[a][b];
            for (int c = 0; c < n; ++c) {
                GradedElement lhs, rhs;
                for (const auto& [k, v] : ab.c) {
                    for (const auto& [l, w] : prod_[k][c].c) lhs.add(l, v * w);
                }
                for (const auto& [k, v] : prod_[b][c].c) {
                    for (const auto& [l, w] : prod_[a][k].c) rhs.add(l, v * w);
                }
                if (!(lhs == rhs)) throw AxiomError("associativity", witness(*this, {a, b, c}));
            }
        }

    // degree shifts of d and del
    auto check_shift = [&](const Mat& op, int shift, int di, int dj, const char* nm) {
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) {
                if (op.at(c, a).is_zero()) continue;
                if (degree(c) != degree(a) + shift)
                    throw AxiomError(std::string(nm) + "-degree", witness(*this, {a, c}));
                if (has_bidegrees_) {
                    auto [ia, ja] = *basis_[a].bidegree;
                    auto [ic, jc] = *basis_[c].bidegree;
                    if (ic != ia + di || jc != ja + dj)
                        throw AxiomError(std::string(nm) + "-bidegree", witness(*this, {a, c}));
                }
            }
    };
    check_shift(d_, 1, 0, 1, "d");
    check_shift(del_, -1, -1, 0, "del");

    // nilpotence and anticommutation
    if (!(d_ * d_).is_zero()) throw AxiomError("d-squared", "d^2 != 0");
    if (!(del_ * del_).is_zero()) throw AxiomError("del-squared", "del^2 != 0");
    if (!(d_ * del_ + del_ * d_).is_zero())
        throw AxiomError("d-del-anticommute", "d del + del d != 0");

    // d is a derivation
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            GradedElement lhs = apply(d_, prod_[a][b]);
            GradedElement rhs = multiply(apply(d_, basis_element(a)), basis_element(b));
            GradedElement t = multiply(basis_element(a), apply(d_, basis_element(b)));
            rhs += t.scaled(sign_of_parity(parity(a)));
            if (!(lhs == rhs)) throw AxiomError("d-derivation", witness(*this, {a, b}));
        }

    // del is second-order: the induced bracket is a graded biderivation
    std::vector<std::vector<GradedElement>> br(n, std::vector<GradedElement>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) br[a][b] = bracket(basis_element(a), basis_element(b));
    auto bracket_with_basis = [&](int a, const GradedElement& e) {
        GradedElement out;
        for (const auto& [k, v] : e.c) {
            for (const auto& [l, w] : br[a][k].c) out.add(l, v * w);
        }
        return out;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                GradedElement lhs = bracket_with_basis(a, prod_[b][c]);
                GradedElement rhs;
                for (const auto& [k, v] : br[a][b].c)
                    for (const auto& [l, w] : prod_[k][c].c) rhs.add(l, v * w);
                GradedElement t;
                for (const auto& [k, v] : br[a][c].c)
                    for (const auto& [l, w] : prod_[b][k].c) t.add(l, v * w);
                rhs += t.scaled(sign_of_parity((parity(a) + 1) * parity(b)));
                if (!(lhs == rhs)) throw AxiomError("del-second-order", witness(*this, {a, b, c}));
            }

    // trace support: only on the top bidegree (dim, dim)
    for (int a = 0; a < n; ++a) {
        if (tr_[a].is_zero()) continue;
        if (has_bidegrees_) {
            auto [i, j] = *basis_[a].bidegree;
            if (i != dim_ || j != dim_) throw AxiomError("trace-support", witness(*this, {a}));
        } else if (degree(a) != 2 * dim_) {
            throw AxiomError("trace-support", witness(*this, {a}));
        }
    }

    // Tr o d = 0 and Tr o del = 0
    for (int a = 0; a < n; ++a) {
        if (!trace(apply(d_, basis_element(a))).is_zero())
            throw AxiomError("trace-d", witness(*this, {a}));
        if (!trace(apply(del_, basis_element(a))).is_zero())
            throw AxiomError("trace-del", witness(*this, {a}));
    }

    // adjointness with Koszul signs
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar lhs = trace(multiply(apply(d_, basis_element(a)), basis_element(b)));
            Scalar rhs = trace(multiply(basis_element(a), apply(d_, basis_element(b))));
            if (!(lhs + sign_of_parity(parity(a)) * rhs).is_zero())
                throw AxiomError("d-adjointness", witness(*this, {a, b}));
            Scalar l2 = trace(multiply(apply(del_, basis_element(a)), basis_element(b)));
            Scalar r2 = trace(multiply(basis_element(a), apply(del_, basis_element(b))));
            if (!(l2 - sign_of_parity(parity(a)) * r2).is_zero())
                throw AxiomError("del-adjointness", witness(*this, {a, b}));
        }

    // trace pairing nondegenerate
    if (!gram_.inverse()) throw AxiomError("trace-nondegenerate", "singular Gram matrix");

    // inner product: Hermitian positive definite
    if (has_custom_h_) {
        if (!(h_ - h_.conj_transpose()).is_zero())
            throw SingularInnerProduct("inner product not Hermitian");
        Mat minor(0, 0);
        for (int k = 1; k <= n; ++k) {
            Mat mk(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) mk.at(i, j) = h_.at(i, j);
            Scalar dk = mk.det();
            if (!dk.is_real() || !(dk.re > 0))
                throw SingularInnerProduct("inner product not positive definite (minor " +
                                           std::to_string(k) + ")");
        }
    }
}

void DGBVModel::finish_and_validate() {
    const int n = size();
    gram_ = Mat(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gram_.at(a, b) = trace(prod_[a][b]);
    validate();
}

DGBVModel DGBVModel::from_raw(const Raw& raw) {
    DGBVModel m;
    m.name_ = raw.name;
    m.field_ = raw.field;
    if (m.field_ != "Q" && m.field_ != "Q(i)") throw ParseError("field must be Q or Q(i)");
    m.dim_ = raw.dimension;
    m.basis_ = raw.basis;
    const int n = m.size();
    if (n == 0) throw ParseError("empty basis");
    for (int i = 0; i < n; ++i) {
        const auto& b = m.basis_[i];
        if (m.index_.count(b.id)) throw ParseError("duplicate basis id '" + b.id + "'");
        m.index_[b.id] = i;
        if (b.bidegree) {
            auto [bi, bj] = *b.bidegree;
            if (bi < 0 || bj < 0) throw ParseError("negative bidegree on '" + b.id + "'");
            if (bi + bj != b.degree)
                throw AxiomError("bidegree-degree", b.id);
        }
    }
    m.has_bidegrees_ = true;
    for (const auto& b : m.basis_)
        if (!b.bidegree) m.has_bidegrees_ = false;

    m.unit_ = m.index_of(raw.unit);
    m.prod_.assign(n, std::vector<GradedElement>(n));
    for (const auto& [a, b, c, v] : raw.product) {
        if (m.field_ == "Q" && !v.is_real()) throw ParseError("complex scalar in Q model");
        m.prod_[m.index_of(a)][m.index_of(b)].add(m.index_of(c), v);
    }
    auto fill = [&](Mat& M, const std::vector<std::tuple<std::string, std::string, Scalar>>& rows) {
        M = Mat(n, n);
        for (const auto& [from, to, v] : rows) {
            if (m.field_ == "Q" && !v.is_real()) throw ParseError("complex scalar in Q model");
            M.at(m.index_of(to), m.index_of(from)) += v;
        }
    };
    fill(m.d_, raw.d);
    fill(m.del_, raw.del);
    m.tr_.assign(n, Scalar());
    for (const auto& [id, ignored, v] : raw.trace) {
        (void)ignored;
        m.tr_[m.index_of(id)] += v;
    }
    if (raw.inner_product.empty()) {
        m.h_ = Mat::identity(n);
        m.has_custom_h_ = false;
    } else {
        m.h_ = Mat(n, n);
        for (const auto& [a, b, v] : raw.inner_product) m.h_.at(m.index_of(a), m.index_of(b)) += v;
        m.has_custom_h_ = true;
    }
    m.finish_and_validate();
    return m;
}

DGBVModel DGBVModel::load(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    Raw raw;
    try {
        raw.name = j.at("name").get<std::string>();
        raw.field = j.at("field").get<std::string>();
        raw.dimension = j.at("dimension").get<int>();
        for (const auto& b : j.at("basis")) {
            GradedBasisElement e;
            e.id = b.at("id").get<std::string>();
            e.degree = b.at("degree").get<int>();
            if (b.contains("bidegree")) {
                auto arr = b.at("bidegree");
                e.bidegree = std::make_pair(arr.at(0).get<int>(), arr.at(1).get<int>());
            }
            raw.basis.push_back(e);
        }
        raw.unit = j.at("unit").get<std::string>();
        for (const auto& row : j.at("product"))
            raw.product.emplace_back(row.at(0).get<std::string>(), row.at(1).get<std::string>(),
                                     row.at(2).get<std::string>(),
                                     parse_scalar(row.at(3).get<std::string>()));
        for (const auto& row : j.at("d"))
            raw.d.emplace_back(row.at(0).get<std::string>(), row.at(1).get<std::string>(),
                               parse_scalar(row.at(2).get<std::string>()));
        for (const auto& row : j.at("del"))
            raw.del.emplace_back(row.at(0).get<std::string>(), row.at(1).get<std::string>(),
                                 parse_scalar(row.at(2).get<std::string>()));
        for (const auto& row : j.at("trace"))
            raw.trace.emplace_back(row.at(0).get<std::string>(), "",
                                   parse_scalar(row.at(1).get<std::string>()));
        if (j.contains("inner_product"))
            for (const auto& row : j.at("inner_product"))
                raw.inner_product.emplace_back(row.at(0).get<std::string>(),
                                               row.at(1).get<std::string>(),
                                               parse_scalar(row.at(2).get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what());
    }
    return from_raw(raw);
}

DGBVModel DGBVModel::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load(ss.str());
}

std::string DGBVModel::serialize() const {
    ordered_json j;
    j["name"] = name_;
    j["field"] = field_;
    j["dimension"] = dim_;
    j["basis"] = ordered_json::array();
    for (const auto& b : basis_) {
        ordered_json e;
        e["id"] = b.id;
        e["degree"] = b.degree;
        if (b.bidegree) e["bidegree"] = {b.bidegree->first, b.bidegree->second};
        j["basis"].push_back(e);
    }
    j["unit"] = basis_[unit_].id;
    j["product"] = ordered_json::array();
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [c, v] : prod_[a][b].c)
                j["product"].push_back({basis_[a].id, basis_[b].id, basis_[c].id, to_string(v)});
    auto dump_op = [&](const Mat& M) {
        ordered_json rows = ordered_json::array();
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (!M.at(c, a).is_zero())
                    rows.push_back({basis_[a].id, basis_[c].id, to_string(M.at(c, a))});
        return rows;
    };
    j["d"] = dump_op(d_);
    j["del"] = dump_op(del_);
    j["trace"] = ordered_json::array();
    for (int a = 0; a < n; ++a)
        if (!tr_[a].is_zero()) j["trace"].push_back({basis_[a].id, to_string(tr_[a])});
    if (has_custom_h_) {
        j["inner_product"] = ordered_json::array();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!h_.at(a, b).is_zero())
                    j["inner_product"].push_back({basis_[a].id, basis_[b].id, to_string(h_.at(a, b))});
    }
    return j.dump(1);
}

uint64_t DGBVModel::content_hash() const {
    std::string s = serialize();
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace bcov

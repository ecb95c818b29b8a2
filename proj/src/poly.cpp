#include "nilslice/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilslice {

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names,
                                               std::vector<int> weights) {
    if (names.size() != weights.size())
        throw std::invalid_argument("VarTable: names/weights size mismatch");
    auto vt = std::make_shared<VarTable>();
    vt->names = std::move(names);
    vt->weights = std::move(weights);
    return vt;
}

std::shared_ptr<const VarTable> VarTable::plain(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make(std::move(names), std::vector<int>(n, 0));
}

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::shared_ptr<const VarTable> vt, const Rat& c) {
    MultiPoly p(std::move(vt));
    if (c != 0) p.terms_.emplace(Expo(p.vt_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::shared_ptr<const VarTable> vt, int index) {
    MultiPoly p(std::move(vt));
    Expo e(p.vt_->size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

void MultiPoly::check_table(const MultiPoly& o) const {
    if (vt_ && o.vt_ && vt_ != o.vt_ && !(vt_->names == o.vt_->names))
        throw std::invalid_argument("MultiPoly: variable table mismatch");
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_table(o);
    if (!vt_) vt_ = o.vt_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_table(o);
    if (!vt_) vt_ = o.vt_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vt_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(vt_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return mul_truncated(o, -1); }

MultiPoly MultiPoly::mul_truncated(const MultiPoly& o, int cap) const {
    check_table(o);
    MultiPoly r(vt_ ? vt_ : o.vt_);
    r.add_mul_truncated(*this, o, cap);
    return r;
}

void MultiPoly::add_mul_truncated(const MultiPoly& q, const MultiPoly& r, int cap) {
    check_table(q);
    check_table(r);
    if (!vt_) vt_ = q.vt_ ? q.vt_ : r.vt_;
    // Iterate the smaller factor outside.
    const MultiPoly& a = q.term_count() <= r.term_count() ? q : r;
    const MultiPoly& b = q.term_count() <= r.term_count() ? r : q;
    Expo e;
    for (const auto& [ea, ca] : a.terms_) {
        const int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : b.terms_) {
            if (cap >= 0) {
                const int db = std::accumulate(eb.begin(), eb.end(), 0);
                if (da + db > cap) continue;
            }
            e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(e, ca * cb);
        }
    }
}

MultiPoly MultiPoly::pow(int k, int cap) const {
    MultiPoly r = constant(vt_, Rat(1));
    for (int i = 0; i < k; ++i) r = r.mul_truncated(*this, cap);
    return r;
}

MultiPoly MultiPoly::truncated(int cap) const {
    if (cap < 0) return *this;
    MultiPoly r(vt_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= cap) r.terms_.emplace(e, c);
    return r;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.rbegin()->first;  // grlex: last term has max degree
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::min_degree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_of(const Expo& e, Grading g) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d += e[i] * (g == Grading::Standard ? 1 : vt_->weights[i] + 2);
    return d;
}

MultiPoly MultiPoly::initial_component(Grading g) const {
    if (terms_.empty()) throw std::invalid_argument("initial_component of zero polynomial");
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int d = degree_of(e, g);
        if (first || d < best) { best = d; first = false; }
    }
    MultiPoly r(vt_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e, g) == best) r.terms_.emplace(e, c);
    return r;
}

bool MultiPoly::is_homogeneous(Grading g) const { return homogeneous_degree(g).has_value(); }

std::optional<int> MultiPoly::homogeneous_degree(Grading g) const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        const int d = degree_of(e, g);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vt_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        --d[var];
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= point[i];
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args,
                             std::shared_ptr<const VarTable> targetTable, int cap) const {
    MultiPoly r(targetTable);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(targetTable, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t = t.mul_truncated(args[i], cap);
        r += t;
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Canonical print: graded-lex descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        const bool neg = c < 0;
        Rat abs = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool hasVar = false;
        std::ostringstream vars;
        for (size_t i = 0; i < it->first.size(); ++i) {
            const int p = it->first[i];
            if (p == 0) continue;
            if (hasVar) vars << '*';
            vars << vt_->names[i];
            if (p > 1) vars << '^' << p;
            hasVar = true;
        }
        if (!hasVar) {
            os << abs.get_str();
        } else if (abs == 1) {
            os << vars.str();
        } else {
            os << abs.get_str() << '*' << vars.str();
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("poly parse: expected number at " +
                                                      std::to_string(start));
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::shared_ptr<const VarTable> vt, const std::string& text) {
    MultiPoly out(vt);
    Parser p(text);
    p.skip_ws();
    if (p.pos >= p.s.size()) return out;
    bool firstTerm = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        bool neg = false;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            neg = true;
        } else if (!firstTerm) {
            throw std::invalid_argument("poly parse: expected + or -");
        }
        firstTerm = false;
        // term: [coef] [* var[^k] [* var[^k] ...]]
        Rat coef(1);
        Expo e(vt->size(), 0);
        bool sawFactor = false;
        p.skip_ws();
        if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
            std::string num = p.number();
            std::string den = "1";
            if (p.eat('/')) den = p.number();
            coef = Rat(Int(num), Int(den));
            coef.canonicalize();
            sawFactor = true;
        }
        while (true) {
            size_t save = p.pos;
            if (sawFactor) {
                if (!p.eat('*')) break;
            }
            p.skip_ws();
            if (p.pos >= p.s.size() ||
                !(std::isalpha(static_cast<unsigned char>(p.s[p.pos])) || p.s[p.pos] == '_')) {
                p.pos = save;
                break;
            }
            std::string name = p.ident();
            auto it = std::find(vt->names.begin(), vt->names.end(), name);
            if (it == vt->names.end())
                throw std::invalid_argument("poly parse: unknown variable " + name);
            int exp = 1;
            if (p.eat('^')) exp = std::stoi(p.number());
            e[it - vt->names.begin()] += exp;
            sawFactor = true;
        }
        if (!sawFactor) throw std::invalid_argument("poly parse: empty term");
        out.add_term(e, neg ? Rat(-coef) : coef);
    }
    return out;
}

}  // namespace nilslice

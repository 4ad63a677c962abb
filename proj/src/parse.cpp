#include "derdim/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace derdim {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

long long parse_int(const std::string& s, int line, const char* what) {
    std::string t = strip(s);
    if (t.empty()) throw parse_error(line, std::string("expected ") + what);
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw parse_error(line, std::string("bad integer for ") + what + ": '" + t + "'");
    }
    if (pos != t.size()) throw parse_error(line, std::string("bad integer for ") + what + ": '" + t + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text) {
    AlgebraFile f;
    std::map<std::string, int> arrow_index;
    enum Section { kField, kVertices, kArrows, kRels } section = kField;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_field = false, have_vertices = false;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        std::string rest;
        std::getline(ls, rest);
        rest = strip(rest);

        if (kw == "field") {
            if (section != kField) throw parse_error(line_no, "'field' must be the first statement");
            long long p = parse_int(rest, line_no, "field modulus");
            if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<u32>(p)))
                throw parse_error(line_no, "field modulus must be a prime in [2, 2^31)");
            f.mod = static_cast<u32>(p);
            have_field = true;
            section = kVertices;
        } else if (kw == "vertices") {
            if (section != kVertices) throw parse_error(line_no, "'vertices' must follow 'field'");
            long long n = parse_int(rest, line_no, "vertex count");
            if (n < 1 || n > 100000) throw parse_error(line_no, "vertex count must be positive");
            f.quiver.vertices = static_cast<int>(n);
            have_vertices = true;
            section = kArrows;
        } else if (kw == "arrow") {
            if (section != kArrows)
                throw parse_error(line_no, section == kRels ? "arrows must come before relations"
                                                            : "'arrow' before 'vertices'");
            size_t colon = rest.find(':');
            if (colon == std::string::npos) throw parse_error(line_no, "arrow syntax: arrow name: src -> tgt");
            std::string name = strip(rest.substr(0, colon));
            if (!is_ident(name)) throw parse_error(line_no, "bad arrow name '" + name + "'");
            if (arrow_index.count(name)) throw parse_error(line_no, "duplicate arrow name '" + name + "'");
            std::string ends = rest.substr(colon + 1);
            size_t arr = ends.find("->");
            if (arr == std::string::npos) throw parse_error(line_no, "arrow syntax: arrow name: src -> tgt");
            long long src = parse_int(ends.substr(0, arr), line_no, "arrow source");
            long long tgt = parse_int(ends.substr(arr + 2), line_no, "arrow target");
            if (src < 1 || src > f.quiver.vertices || tgt < 1 || tgt > f.quiver.vertices)
                throw parse_error(line_no, "arrow endpoint out of range");
            arrow_index[name] = static_cast<int>(f.quiver.arrows.size());
            f.quiver.arrows.push_back(Arrow{name, static_cast<int>(src - 1), static_cast<int>(tgt - 1)});
        } else if (kw == "rel") {
            if (!have_vertices) throw parse_error(line_no, "'rel' before 'vertices'");
            section = kRels;
            // split into signed terms
            std::vector<std::pair<int, std::string>> pieces;  // sign, text
            std::string cur;
            int sign = +1;
            for (char c : rest) {
                if (c == '+' || c == '-') {
                    if (!strip(cur).empty()) pieces.emplace_back(sign, strip(cur));
                    else if (!pieces.empty())
                        throw parse_error(line_no, "empty relation term");
                    sign = (c == '+') ? +1 : -1;
                    cur.clear();
                } else cur.push_back(c);
            }
            if (!strip(cur).empty()) pieces.emplace_back(sign, strip(cur));
            if (pieces.empty()) throw parse_error(line_no, "relation needs at least one term");
            Relation rel;
            for (auto& [sgn, text] : pieces) {
                std::vector<std::string> factors = split(text, '*');
                for (std::string& fac : factors) fac = strip(fac);
                size_t k = 0;
                long long coeff = 1;
                if (!factors.empty() && !factors[0].empty() &&
                    (std::isdigit(static_cast<unsigned char>(factors[0][0])))) {
                    coeff = parse_int(factors[0], line_no, "relation coefficient");
                    k = 1;
                }
                if (k >= factors.size()) throw parse_error(line_no, "relation term has no path");
                RelTerm term;
                term.coeff = fp_reduce(coeff * sgn, f.mod);
                if (term.coeff == 0)
                    throw parse_error(line_no, "relation coefficient vanishes mod " + std::to_string(f.mod));
                for (; k < factors.size(); ++k) {
                    auto it = arrow_index.find(factors[k]);
                    if (it == arrow_index.end())
                        throw parse_error(line_no, "unknown arrow '" + factors[k] + "'");
                    term.arrows.push_back(it->second);
                }
                if (term.arrows.size() < 2)
                    throw parse_error(line_no, "relation paths must have length >= 2");
                for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
                    if (f.quiver.arrows[term.arrows[i]].tgt != f.quiver.arrows[term.arrows[i + 1]].src)
                        throw parse_error(line_no, "relation path is not composable");
                rel.terms.push_back(std::move(term));
            }
            int src = f.quiver.arrows[rel.terms[0].arrows.front()].src;
            int tgt = f.quiver.arrows[rel.terms[0].arrows.back()].tgt;
            for (const RelTerm& t : rel.terms)
                if (f.quiver.arrows[t.arrows.front()].src != src ||
                    f.quiver.arrows[t.arrows.back()].tgt != tgt)
                    throw parse_error(line_no, "relation terms are not parallel");
            f.relations.push_back(std::move(rel));
        } else {
            throw parse_error(line_no, "unknown statement '" + kw + "'");
        }
    }
    if (!have_field) throw parse_error(line_no, "missing 'field' statement");
    if (!have_vertices) throw parse_error(line_no, "missing 'vertices' statement");
    return f;
}

AlgebraFile parse_algebra_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str());
}

std::string serialize_algebra_file(const AlgebraFile& f) {
    std::ostringstream out;
    out << "field " << f.mod << "\n";
    out << "vertices " << f.quiver.vertices << "\n";
    for (const Arrow& a : f.quiver.arrows)
        out << "arrow " << a.name << ": " << a.src + 1 << " -> " << a.tgt + 1 << "\n";
    for (const Relation& rel : f.relations) {
        out << "rel ";
        for (size_t t = 0; t < rel.terms.size(); ++t) {
            if (t) out << " + ";
            const RelTerm& term = rel.terms[t];
            if (term.coeff != 1) out << term.coeff << "*";
            for (size_t k = 0; k < term.arrows.size(); ++k) {
                if (k) out << "*";
                out << f.quiver.arrows[term.arrows[k]].name;
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace derdim

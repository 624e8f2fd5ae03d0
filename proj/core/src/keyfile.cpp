#include "caoli/keyfile.hpp"

#include "caoli/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace caoli::keyfile {
namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::string next(const std::string& what) {
        std::string line;
        if (!std::getline(in_, line)) {
            throw ParseError(line_no_ + 1, "unexpected end of file: expected " + what);
        }
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    }

    int line_no() const { return line_no_; }

    void expect_eof() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) throw ParseError(line_no_, "trailing content after key data");
        }
    }

private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<Int> parse_row(const std::string& line, std::size_t expect, int line_no,
                           const std::string& what) {
    auto tokens = split_ws(line);
    if (tokens.size() != expect) {
        throw ParseError(line_no, what + ": expected " + std::to_string(expect) +
                                      " entries, found " + std::to_string(tokens.size()));
    }
    std::vector<Int> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) {
        Int v;
        if (!parse_int(t, v)) throw ParseError(line_no, what + ": bad integer '" + t + "'");
        if (v < 0) throw ParseError(line_no, what + ": negative entry " + t);
        row.push_back(std::move(v));
    }
    return row;
}

std::pair<std::size_t, Int> parse_dims(LineReader& r) {
    const std::string line = r.next("'n d'");
    auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(r.line_no(), "expected 'n d'");
    Int n_val, d_val;
    if (!parse_int(tokens[0], n_val) || n_val < 1 || n_val > 100000) {
        throw ParseError(r.line_no(), "n must be a positive integer (at most 100000)");
    }
    if (!parse_int(tokens[1], d_val) || d_val < 1) {
        throw ParseError(r.line_no(), "d must be a positive integer");
    }
    return {n_val.convert_to<std::size_t>(), std::move(d_val)};
}

Matrix parse_square(LineReader& r, std::size_t n, const std::string& what) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string line = r.next(what + " row");
        auto row = parse_row(line, n, r.line_no(), what + " row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) m.entry(i, j) = std::move(row[j]);
    }
    return m;
}

// first_line is the file line of the matrix's first row
void require_unit_lower(const Matrix& m, int first_line, const std::string& what) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.entry(i, i) != 1) {
            throw ParseError(first_line + static_cast<int>(i),
                             what + ": diagonal entry must be 1");
        }
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m.entry(i, j) != 0) {
                throw ParseError(first_line + static_cast<int>(i),
                                 what + ": entry above the diagonal must be 0");
            }
        }
    }
}

void require_cap(const Matrix& m, const Int& cap, int first_line, const std::string& what) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m.entry(i, j) > cap) {
                throw ParseError(first_line + static_cast<int>(i),
                                 what + ": entry exceeds the bound " + cap.str());
            }
        }
    }
}

void write_row(std::ostream& out, const Matrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out << ' ';
        out << m.entry(i, j);
    }
    out << '\n';
}

}  // namespace

void write_public(std::ostream& out, const PublicKey& pk) {
    out << "caoli-pub v1\n";
    out << pk.n() << ' ' << pk.d << '\n';
    for (std::size_t i = 0; i < pk.n(); ++i) write_row(out, pk.b, i);
}

void write_private(std::ostream& out, const PrivateKey& sk) {
    out << "caoli-priv v1\n";
    out << sk.n() << ' ' << sk.d << '\n';
    for (std::size_t i = 0; i < sk.n(); ++i) {
        if (i) out << ' ';
        out << sk.primes[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < sk.n(); ++i) write_row(out, sk.p1, i);
    for (std::size_t i = 0; i < sk.n(); ++i) write_row(out, sk.p2, i);
}

PublicKey read_public(std::istream& in) {
    LineReader r(in);
    if (r.next("header") != "caoli-pub v1") {
        throw ParseError(r.line_no(), "expected 'caoli-pub v1'");
    }
    auto [n, d] = parse_dims(r);
    const int first_row_line = r.line_no() + 1;
    Matrix b = parse_square(r, n, "B");
    r.expect_eof();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (b.entry(i, j) != b.entry(j, i)) {
                throw ParseError(first_row_line + static_cast<int>(j),
                                 "B is not symmetric at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
            }
        }
    }
    return {std::move(b), std::move(d)};
}

PrivateKey read_private(std::istream& in) {
    LineReader r(in);
    if (r.next("header") != "caoli-priv v1") {
        throw ParseError(r.line_no(), "expected 'caoli-priv v1'");
    }
    auto [n, d] = parse_dims(r);
    const std::string prime_line_text = r.next("prime list");
    const int primes_line = r.line_no();
    std::vector<Int> primes = parse_row(prime_line_text, n, primes_line, "prime list");
    const int p1_line = r.line_no() + 1;
    Matrix p1 = parse_square(r, n, "P1");
    const int p2_line = r.line_no() + 1;
    Matrix p2 = parse_square(r, n, "P2");
    r.expect_eof();

    try {
        validate_primes(primes, d);
    } catch (const ParamError& e) {
        throw ParseError(primes_line, e.what());
    }
    require_unit_lower(p1, p1_line, "P1");
    require_unit_lower(p2, p2_line, "P2");
    const Int cap = entry_bound(primes, d).cap;
    require_cap(p1, cap, p1_line, "P1");
    require_cap(p2, cap, p2_line, "P2");
    return PrivateKey::from_parts(std::move(primes), std::move(p1), std::move(p2), std::move(d));
}

void save_public(const std::string& path, const PublicKey& pk) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot write " + path);
    write_public(out, pk);
    out.flush();
    if (!out) throw ParamError("write failed for " + path);
}

void save_private(const std::string& path, const PrivateKey& sk) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot write " + path);
    write_private(out, sk);
    out.flush();
    if (!out) throw ParamError("write failed for " + path);
}

PublicKey load_public(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot read " + path);
    return read_public(in);
}

PrivateKey load_private(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot read " + path);
    return read_private(in);
}

}  // namespace caoli::keyfile

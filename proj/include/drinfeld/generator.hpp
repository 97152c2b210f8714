#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear.hpp"

namespace drinfeld {

class rank_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class foreign_generator_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char to_char(Series s) { return static_cast<char>(s); }

inline Series parse_series(const std::string& s)
{
    if (s == "A") return Series::A;
    if (s == "B") return Series::B;
    if (s == "C") return Series::C;
    if (s == "D") return Series::D;
    throw std::invalid_argument("unknown series '" + s + "'");
}

inline void validate_rank(Series s, int rank)
{
    const int min_rank = s == Series::D ? 2 : 1;
    if (rank < min_rank)
        throw rank_error(std::string(1, to_char(s)) + "_n requires n >= " + std::to_string(min_rank) + ", got " +
                         std::to_string(rank));
}

/// Number of Cartan indices (= oscillator modes): n+1 for A_n, n otherwise.
inline int cartan_count(Series s, int rank) { return s == Series::A ? rank + 1 : rank; }

/// Xplus(i) / xminus(i) are the canonical rotated Cartan generators
/// (H_i ± i I_i)/√2. With a second index they are the mixed rotation
/// (H_i ± i H_j)/√2.
enum class Kind : std::uint8_t { H, I, F, P, Q, S, T, U, V, Xplus, xminus };

struct GeneratorId {
    Kind kind = Kind::H;
    int i = 0;
    int j = 0;  // 0 when the generator carries one index

    friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;

    bool two_index() const { return j != 0; }

    bool is_cartan() const { return kind == Kind::H || kind == Kind::I || kind == Kind::Xplus || kind == Kind::xminus; }

    std::string label() const
    {
        std::string name;
        switch (kind) {
        case Kind::H: name = "H"; break;
        case Kind::I: name = "I"; break;
        case Kind::F: name = "F"; break;
        case Kind::P: name = "P"; break;
        case Kind::Q: name = "Q"; break;
        case Kind::S: name = "S"; break;
        case Kind::T: name = "T"; break;
        case Kind::U: name = "U"; break;
        case Kind::V: name = "V"; break;
        case Kind::Xplus: name = "X"; break;
        case Kind::xminus: name = "x^"; break;
        }
        name += std::to_string(i);
        if (two_index()) name += "," + std::to_string(j);
        return name;
    }

    static GeneratorId parse(const std::string& label)
    {
        auto fail = [&]() -> GeneratorId { throw std::invalid_argument("bad generator label '" + label + "'"); };
        if (label.empty()) return fail();
        GeneratorId g;
        std::size_t pos = 1;
        switch (label[0]) {
        case 'H': g.kind = Kind::H; break;
        case 'I': g.kind = Kind::I; break;
        case 'F': g.kind = Kind::F; break;
        case 'P': g.kind = Kind::P; break;
        case 'Q': g.kind = Kind::Q; break;
        case 'S': g.kind = Kind::S; break;
        case 'T': g.kind = Kind::T; break;
        case 'U': g.kind = Kind::U; break;
        case 'V': g.kind = Kind::V; break;
        case 'X': g.kind = Kind::Xplus; break;
        case 'x':
            if (label.size() < 2 || label[1] != '^') return fail();
            g.kind = Kind::xminus;
            pos = 2;
            break;
        default: return fail();
        }
        const std::string rest = label.substr(pos);
        const auto comma = rest.find(',');
        try {
            std::size_t used = 0;
            g.i = std::stoi(rest.substr(0, comma), &used);
            if (used != (comma == std::string::npos ? rest.size() : comma)) return fail();
            if (comma != std::string::npos) {
                const std::string second = rest.substr(comma + 1);
                g.j = std::stoi(second, &used);
                if (used != second.size()) return fail();
            }
        } catch (const std::logic_error&) {
            return fail();
        }
        if (g.i <= 0 || g.j < 0) return fail();
        return g;
    }
};

inline GeneratorId H(int i) { return {Kind::H, i, 0}; }
inline GeneratorId I(int i) { return {Kind::I, i, 0}; }
inline GeneratorId F(int i, int j) { return {Kind::F, i, j}; }
inline GeneratorId P(int i, int j) { return {Kind::P, i, j}; }
inline GeneratorId Q(int i, int j) { return {Kind::Q, i, j}; }
inline GeneratorId S(int i, int j) { return {Kind::S, i, j}; }
inline GeneratorId T(int i, int j) { return {Kind::T, i, j}; }
inline GeneratorId U(int i) { return {Kind::U, i, 0}; }
inline GeneratorId V(int i) { return {Kind::V, i, 0}; }
inline GeneratorId Xp(int i, int j = 0) { return {Kind::Xplus, i, j}; }
inline GeneratorId xm(int i, int j = 0) { return {Kind::xminus, i, j}; }

/// Linear combination of named generators.
using Element = LinearCombination<GeneratorId>;

inline Element elem(const GeneratorId& g, const Scalar& c = Scalar(1)) { return Element(g, c); }

inline std::string to_string(const Element& e)
{
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : e) {
        if (!out.empty()) out += " + ";
        out += c.is_one() ? g.label() : "(" + c.to_string() + ")*" + g.label();
    }
    return out;
}

}  // namespace drinfeld

// The algebra presentation file format.
//
// Line oriented, UTF-8, '#' starts a comment, blank lines ignored:
//
//   field 101
//   vertices 3
//   arrow a: 1 -> 2
//   arrow b: 2 -> 3
//   rel a*b
//   rel 2*a*b + 3*a*b
//
// Sections appear in that order; vertices are 1-based in the format. Every
// diagnostic carries the offending line number.

#pragma once

#include <stdexcept>
#include <string>

#include "derdim/algebra.hpp"

namespace derdim {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct AlgebraFile {
    u32 mod = 101;
    Quiver quiver;
    std::vector<Relation> relations;
};

AlgebraFile parse_algebra_text(const std::string& text);
AlgebraFile parse_algebra_path(const std::string& path);

// Canonical text for a presentation; parsing it again yields the same
// algebra.
std::string serialize_algebra_file(const AlgebraFile& f);

}  // namespace derdim

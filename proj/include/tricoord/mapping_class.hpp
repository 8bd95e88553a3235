#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tricoord/curves.hpp"
#include "tricoord/matrix.hpp"
#include "tricoord/triangulation.hpp"

namespace tricoord {

struct Flip {
    int edge;
};

/// Relabels edge e as perm[e].
struct Reorder {
    std::vector<int> perm;
};

using Move = std::variant<Flip, Reorder>;

std::vector<Move> reversed_moves(const std::vector<Move>& moves);

/// A walk in the graph of triangulations: flips and reorders applied in
/// order from a starting triangulation. Construction validates every move
/// at its position and records the flip squares for fast coordinate
/// updates.
class Path {
public:
    Path(Triangulation start, std::vector<Move> moves);

    const Triangulation& start() const { return start_; }
    const Triangulation& end() const { return end_; }
    const std::vector<Move>& moves() const { return moves_; }
    std::size_t length() const { return moves_.size(); }
    std::size_t flip_count() const { return flip_count_; }

    struct FlipStep {
        int edge;
        int a, b, c, d;  // square sides, a opposite c, b opposite d
    };
    struct ReorderStep {
        std::vector<int> perm;
    };
    using Step = std::variant<FlipStep, ReorderStep>;
    const std::vector<Step>& steps() const { return steps_; }

private:
    Triangulation start_, end_;
    std::vector<Move> moves_;
    std::vector<Step> steps_;
    std::size_t flip_count_ = 0;
};

/// A closed path: canonical equality of endpoints is what lets it act on
/// edge-vector coordinates as a mapping class.
class MappingClassPath {
public:
    explicit MappingClassPath(Path path);

    const Path& path() const { return path_; }
    const Triangulation& base() const { return path_.start(); }
    std::size_t length() const { return path_.length(); }

private:
    Path path_;
};

MappingClassPath reverse(const MappingClassPath& p);

/// Image of a multicurve vector under a path: reorders permute, a flip of e
/// replaces v[e] by max(v[a]+v[c], v[b]+v[d]) - v[e].
EdgeVector apply(const Path& p, const EdgeVector& v);

struct GeneratorEntry {
    MappingClassPath path;
    /// Edge vector of the twisting curve when the generator is a twist or
    /// half-twist; verified fixed by the path at table construction.
    std::optional<EdgeVector> twist_curve;
};

class GeneratorTable {
public:
    GeneratorTable(Triangulation base, std::vector<std::pair<std::string, GeneratorEntry>> entries);

    const Triangulation& base() const { return base_; }
    const GeneratorEntry& at(const std::string& name) const;
    const std::vector<std::pair<std::string, GeneratorEntry>>& entries() const { return entries_; }

private:
    Triangulation base_;
    std::vector<std::pair<std::string, GeneratorEntry>> entries_;
};

struct WordLetter {
    std::string name;
    int sign = 1;  // -1 for inverse
};
using Word = std::vector<WordLetter>;

/// Generator names joined by '.', prefix '~' for inverse: "a.~b.a".
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

/// Concatenates the generators' paths in word order h1 then h2 ...; inverse
/// letters use the reversed path.
MappingClassPath compile(const Word& word, const GeneratorTable& table);

/// The linear map and cell inequalities of one piecewise-linear cell.
struct CellMatrices {
    BigMatrix A, B;
};

/// The cell containing v, per branch choice a+c >= b+d (ties to branch 1).
CellMatrices cell_of(const Path& p, const EdgeVector& v);

/// Depth-first enumeration of the 2^flips branch cells in lexicographic
/// order of their choice strings. With pruning on, subtrees whose partial
/// system {B*v >= 0, v >= 0, sum v = 1} is infeasible are skipped.
///
/// Callers searching for invariant multicurves may tighten the pruning
/// system with extra rows on the input (the corner-choice-independent face
/// inequalities) and with the image rows A*v >= 0, which hold along the
/// whole trajectory of any multicurve but not on general cone vectors.
class BranchEnumerator {
public:
    struct Cell {
        BigMatrix A, B;
        std::string choices;  // '1'/'2' per flip, in path order
    };

    struct PruneHints {
        const BigMatrix* input_rows = nullptr;
        bool image_nonnegative = false;
    };

    explicit BranchEnumerator(const Path& p, bool prune = true);
    BranchEnumerator(const Path& p, bool prune, PruneHints hints);

    std::optional<Cell> next();

    std::uint64_t yielded() const { return yielded_; }
    std::uint64_t pruned_subtrees() const { return pruned_; }

private:
    struct Pending {
        std::size_t step;
        BigMatrix A, B;
        std::string choices;
    };

    std::optional<Cell> descend(std::size_t step, BigMatrix A, BigMatrix B, std::string choices);
    bool prune_infeasible(const BigMatrix& A, const BigMatrix& B) const;

    const std::vector<Path::Step> steps_;
    std::size_t zeta_;
    bool prune_;
    PruneHints hints_;
    bool done_ = false;
    std::vector<Pending> stack_;
    std::uint64_t yielded_ = 0, pruned_ = 0;
};

/// True iff the path fixes every multicurve vector with entries <= 2.
/// For a connected surface other than a once-marked torus or four-times
/// marked sphere this means the mapping class is the identity; in general it
/// only reports triviality of the action on multicurves.
bool acts_trivially(const MappingClassPath& p);

} // namespace tricoord

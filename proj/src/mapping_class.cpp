#include "tricoord/mapping_class.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tricoord/cone.hpp"

namespace tricoord {

namespace {

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

BigMatrix flip_A(std::size_t zeta, const Path::FlipStep& s, bool branch1) {
    BigMatrix m = BigMatrix::identity(zeta);
    const int x = branch1 ? s.a : s.b;
    const int y = branch1 ? s.c : s.d;
    m.at(s.edge, x) += 1;
    m.at(s.edge, y) += 1;
    m.at(s.edge, s.edge) -= 2;
    return m;
}

std::vector<BigInt> flip_B_row(std::size_t zeta, const Path::FlipStep& s, bool branch1) {
    std::vector<BigInt> row(zeta);
    const int sgn = branch1 ? 1 : -1;
    row[s.a] += sgn;
    row[s.c] += sgn;
    row[s.b] -= sgn;
    row[s.d] -= sgn;
    return row;
}

BigMatrix perm_matrix(const std::vector<int>& perm) {
    BigMatrix m(perm.size(), perm.size());
    for (std::size_t e = 0; e < perm.size(); ++e) m.at(perm[e], e) = 1;
    return m;
}

// Composes one more move onto the prefix matrices: A := A_mv * A and
// B gains the row block B_mv * A.
void compose_reorder(BigMatrix& A, BigMatrix& B, const std::vector<int>& perm) {
    A = perm_matrix(perm).mul(A);
    B.append_row(std::vector<BigInt>(A.cols()));
}

void compose_flip(BigMatrix& A, BigMatrix& B, const Path::FlipStep& s, bool branch1) {
    const std::size_t zeta = A.cols();
    std::vector<BigInt> the_row = flip_B_row(zeta, s, branch1);
    std::vector<BigInt> composed(zeta);
    for (std::size_t j = 0; j < zeta; ++j) {
        for (std::size_t k = 0; k < zeta; ++k)
            if (the_row[k] != 0) composed[j] += the_row[k] * A.at(k, j);
    }
    B.append_row(composed);
    A = flip_A(zeta, s, branch1).mul(A);
}

} // namespace

std::vector<Move> reversed_moves(const std::vector<Move>& moves) {
    std::vector<Move> out;
    out.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (const Flip* f = std::get_if<Flip>(&*it))
            out.push_back(*f);
        else
            out.push_back(Reorder{inverse_perm(std::get<Reorder>(*it).perm)});
    }
    return out;
}

Path::Path(Triangulation start, std::vector<Move> moves)
    : start_(std::move(start)), end_(start_), moves_(std::move(moves)) {
    steps_.reserve(moves_.size());
    for (const Move& m : moves_) {
        if (const Flip* f = std::get_if<Flip>(&m)) {
            const auto sq = end_.flip_square(f->edge);
            steps_.push_back(FlipStep{f->edge, sq.a, sq.b, sq.c, sq.d});
            end_ = end_.flip(f->edge);
            ++flip_count_;
        } else {
            const auto& perm = std::get<Reorder>(m).perm;
            end_ = end_.reorder(perm);
            steps_.push_back(ReorderStep{perm});
        }
    }
}

MappingClassPath::MappingClassPath(Path path) : path_(std::move(path)) {
    if (!(path_.start() == path_.end()))
        throw std::invalid_argument(
            "mapping class path does not close up: end differs from start");
}

MappingClassPath reverse(const MappingClassPath& p) {
    return MappingClassPath(Path(p.path().start(), reversed_moves(p.path().moves())));
}

EdgeVector apply(const Path& p, const EdgeVector& v) {
    if (!is_multicurve(p.start(), v))
        throw std::invalid_argument("apply: input is not a multicurve vector");
    EdgeVector cur = v;
    for (const auto& step : p.steps()) {
        if (const auto* f = std::get_if<Path::FlipStep>(&step)) {
            BigInt s1 = cur[f->a] + cur[f->c];
            BigInt s2 = cur[f->b] + cur[f->d];
            cur[f->edge] = (s1 >= s2 ? s1 : s2) - cur[f->edge];
        } else {
            const auto& perm = std::get<Path::ReorderStep>(step).perm;
            EdgeVector next(cur.size());
            for (std::size_t e = 0; e < cur.size(); ++e) next[perm[e]] = cur[e];
            cur = std::move(next);
        }
    }
    return cur;
}

GeneratorTable::GeneratorTable(Triangulation base,
                               std::vector<std::pair<std::string, GeneratorEntry>> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("generator table is empty");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& [name, entry] = entries_[i];
        if (name.empty()) throw std::invalid_argument("generator with empty name");
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[j].first == name)
                throw std::invalid_argument("duplicate generator name: " + name);
        if (!(entry.path.base() == base_))
            throw std::invalid_argument("generator " + name + " does not start at the table base");
        if (entry.twist_curve) {
            if (!is_multicurve(base_, *entry.twist_curve))
                throw std::invalid_argument("generator " + name +
                                            ": twist curve is not a multicurve");
            if (tricoord::apply(entry.path.path(), *entry.twist_curve) != *entry.twist_curve)
                throw std::invalid_argument("generator " + name +
                                            ": path does not fix its twisting curve");
        }
    }
}

const GeneratorEntry& GeneratorTable::at(const std::string& name) const {
    for (const auto& [n, e] : entries_)
        if (n == name) return e;
    throw std::invalid_argument("unknown generator: " + name);
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
        WordLetter letter;
        if (!tok.empty() && tok[0] == '~') {
            letter.sign = -1;
            tok = tok.substr(1);
        }
        if (tok.empty()) throw std::invalid_argument("word has an empty letter");
        for (char c : tok)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw std::invalid_argument("invalid character in word: " + std::string(1, c));
        letter.name = tok;
        w.push_back(std::move(letter));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << '.';
        if (w[i].sign < 0) os << '~';
        os << w[i].name;
    }
    return os.str();
}

MappingClassPath compile(const Word& word, const GeneratorTable& table) {
    std::vector<Move> moves;
    for (const WordLetter& letter : word) {
        const GeneratorEntry& entry = table.at(letter.name);
        const auto& gm = entry.path.path().moves();
        if (letter.sign > 0)
            moves.insert(moves.end(), gm.begin(), gm.end());
        else {
            auto rev = reversed_moves(gm);
            moves.insert(moves.end(), rev.begin(), rev.end());
        }
    }
    return MappingClassPath(Path(table.base(), std::move(moves)));
}

CellMatrices cell_of(const Path& p, const EdgeVector& v) {
    if (!is_multicurve(p.start(), v))
        throw std::invalid_argument("cell_of: input is not a multicurve vector");
    const std::size_t zeta = v.size();
    BigMatrix A = BigMatrix::identity(zeta);
    BigMatrix B(0, zeta);
    EdgeVector cur = v;
    for (const auto& step : p.steps()) {
        if (const auto* f = std::get_if<Path::FlipStep>(&step)) {
            const BigInt s1 = cur[f->a] + cur[f->c];
            const BigInt s2 = cur[f->b] + cur[f->d];
            const bool branch1 = s1 >= s2;
            compose_flip(A, B, *f, branch1);
            cur[f->edge] = (branch1 ? s1 : s2) - cur[f->edge];
        } else {
            const auto& perm = std::get<Path::ReorderStep>(step).perm;
            compose_reorder(A, B, perm);
            EdgeVector next(cur.size());
            for (std::size_t e = 0; e < cur.size(); ++e) next[perm[e]] = cur[e];
            cur = std::move(next);
        }
    }
    if (B.rows() == 0) B.append_row(std::vector<BigInt>(zeta));
    return {std::move(A), std::move(B)};
}

BranchEnumerator::BranchEnumerator(const Path& p, bool prune)
    : BranchEnumerator(p, prune, PruneHints{}) {}

BranchEnumerator::BranchEnumerator(const Path& p, bool prune, PruneHints hints)
    : steps_(p.steps()), zeta_(p.start().zeta()), prune_(prune), hints_(hints) {
    stack_.push_back(Pending{0, BigMatrix::identity(zeta_), BigMatrix(0, zeta_), ""});
}

bool BranchEnumerator::prune_infeasible(const BigMatrix& A, const BigMatrix& B) const {
    BigMatrix sys = B;
    if (hints_.input_rows) sys = sys.vstack(*hints_.input_rows);
    if (hints_.image_nonnegative) sys = sys.vstack(A);
    return !cone_feasible(sys);
}

std::optional<BranchEnumerator::Cell> BranchEnumerator::descend(std::size_t step, BigMatrix A,
                                                                BigMatrix B, std::string choices) {
    for (;;) {
        if (step == steps_.size()) {
            if (B.rows() == 0) B.append_row(std::vector<BigInt>(zeta_));
            ++yielded_;
            return Cell{std::move(A), std::move(B), std::move(choices)};
        }
        if (const auto* f = std::get_if<Path::FlipStep>(&steps_[step])) {
            BigMatrix A1 = A, B1 = B;
            compose_flip(A1, B1, *f, true);
            bool ok1 = !prune_ || !prune_infeasible(A1, B1);
            BigMatrix A2 = std::move(A), B2 = std::move(B);
            compose_flip(A2, B2, *f, false);
            bool ok2 = !prune_ || !prune_infeasible(A2, B2);
            if (!ok1) ++pruned_;
            if (!ok2) ++pruned_;
            if (ok1 && ok2)
                stack_.push_back(Pending{step + 1, std::move(A2), std::move(B2), choices + '2'});
            if (ok1) {
                A = std::move(A1);
                B = std::move(B1);
                choices += '1';
            } else if (ok2) {
                A = std::move(A2);
                B = std::move(B2);
                choices += '2';
            } else {
                return std::nullopt;
            }
            ++step;
        } else {
            compose_reorder(A, B, std::get<Path::ReorderStep>(steps_[step]).perm);
            ++step;
        }
    }
}

std::optional<BranchEnumerator::Cell> BranchEnumerator::next() {
    while (!stack_.empty()) {
        Pending p = std::move(stack_.back());
        stack_.pop_back();
        if (auto cell = descend(p.step, std::move(p.A), std::move(p.B), std::move(p.choices)))
            return cell;
    }
    done_ = true;
    return std::nullopt;
}

bool acts_trivially(const MappingClassPath& p) {
    const int zeta = p.base().zeta();
    EdgeVector v(zeta, BigInt(0));
    for (;;) {
        int i = 0;
        while (i < zeta && v[i] == 2) v[i++] = 0;
        if (i == zeta) return true;
        v[i] += 1;
        if (!is_multicurve(p.base(), v)) continue;
        if (tricoord::apply(p.path(), v) != v) return false;
    }
}

} // namespace tricoord

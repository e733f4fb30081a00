#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pariton/ext_priority.hpp"
#include "pariton/position_set.hpp"

namespace pariton {

using Pos = int32_t;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/** Input description of one position, before id compaction. */
struct PositionSpec {
    int64_t id = 0;
    int priority = 0;
    int owner = 0;
    std::vector<int64_t> successors;
    std::string name;
};

/**
 * A parity game: finite directed graph without sinks, every position owned
 * by player 0 or player 1 and carrying a non-negative priority.
 *
 * Positions are dense 0..n-1 internally; the ids found in an input file are
 * kept for round-tripping and user-facing output.  Successor lists are
 * deduplicated and sorted ascending, predecessor lists are precomputed.
 */
class ParityGame {
public:
    static ParityGame from_specs(const std::vector<PositionSpec>& specs);

    /**
     * Parse the PGSolver format:
     *   [parity <max-id>;]
     *   <id> <priority> <owner> <succ>(,<succ>)* ["<name>"];
     * '%' starts a comment until end of line.  Sparse ids are compacted in
     * declaration order.  Throws ParseError (with a line number) on owners
     * outside {0,1}, empty successor lists, references to undeclared ids,
     * duplicate declarations, or malformed syntax.
     */
    static ParityGame parse_pgsolver(std::istream& in);
    static ParityGame parse_pgsolver_file(const std::string& path);

    /** Inverse of parse_pgsolver: parse(write(g)) is structurally equal to g. */
    void write_pgsolver(std::ostream& out) const;

    int size() const { return n_; }
    int priority(Pos v) const { return priority_[v]; }
    int owner(Pos v) const { return owner_[v]; }
    int64_t original_id(Pos v) const { return original_id_[v]; }
    const std::string& name(Pos v) const { return name_[v]; }

    std::span<const Pos> successors(Pos v) const {
        return {succ_.data() + succ_off_[v], succ_.data() + succ_off_[v + 1]};
    }
    std::span<const Pos> predecessors(Pos v) const {
        return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
    }
    bool has_move(Pos v, Pos w) const;

    size_t move_count() const { return succ_.size(); }
    int max_priority() const { return max_priority_; }
    /** Number of distinct priorities that actually occur. */
    int distinct_priorities() const;

    bool structurally_equal(const ParityGame& o) const;

    PositionSet all_positions() const { return PositionSet::full(n_); }
    /** Positions owned by the given player. */
    PositionSet owned_by(int player) const;
    /** Positions with the given priority. */
    PositionSet with_priority(int priority) const;

private:
    int n_ = 0;
    std::vector<int> priority_;
    std::vector<uint8_t> owner_;
    std::vector<int32_t> succ_off_, pred_off_;
    std::vector<Pos> succ_, pred_;
    std::vector<int64_t> original_id_;
    std::vector<std::string> name_;
    int max_priority_ = 0;
};

/** Positional strategy fragment: target move per position, -1 when unset. */
class Strategy {
public:
    Strategy() = default;
    explicit Strategy(int n) : tgt_(n, -1) {}

    Pos get(Pos v) const { return tgt_[v]; }
    bool has(Pos v) const { return tgt_[v] >= 0; }
    void set(Pos v, Pos w) { tgt_[v] = w; }
    void clear(Pos v) { tgt_[v] = -1; }
    int universe() const { return int(tgt_.size()); }

private:
    std::vector<Pos> tgt_;
};

/**
 * Controlled predecessor set of V for `player` within `ambient` (null =
 * whole game): positions of `player` with some move into V, plus positions
 * of the opponent all of whose ambient moves lead into V.
 */
PositionSet pre(const ParityGame& g, int player, const PositionSet& V,
                const PositionSet* ambient = nullptr);

/**
 * Least fixpoint of X = base ∪ (pre(X) ∩ pool) within `ambient`.
 *
 * `pool` limits which positions may join (null = any ambient position);
 * `base` members are included regardless.  When `strategy` is non-null, an
 * attractor move is recorded for every attracted position owned by `player`
 * (base members are untouched).  Deterministic: positions join in worklist
 * order seeded ascending from base.
 */
PositionSet attractor(const ParityGame& g, int player, const PositionSet& base,
                      const PositionSet* pool = nullptr,
                      const PositionSet* ambient = nullptr,
                      Strategy* strategy = nullptr);

/**
 * Escape set of V for `player` within `ambient`: members of V from which
 * `player` can force leaving V in one step — own positions with some
 * ambient move out of V, opponent positions with all ambient moves out.
 */
PositionSet escape(const ParityGame& g, int player, const PositionSet& V,
                   const PositionSet* ambient = nullptr);

/** Highest priority among `within` (bot if empty). */
ExtPriority max_priority_in(const ParityGame& g, const PositionSet& within);

/** True if every `within` position keeps at least one move inside `within`. */
bool is_sink_free(const ParityGame& g, const PositionSet& within);

/**
 * Subgame induced by `keep` (which must be sink-free in g): positions are
 * renumbered densely in ascending order and their original ids in the new
 * game are the old dense indices, so results map back via original_id().
 */
ParityGame induced_subgame(const ParityGame& g, const PositionSet& keep);

}  // namespace pariton

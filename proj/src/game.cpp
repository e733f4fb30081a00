#include "pariton/game.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace pariton {

ParityGame ParityGame::from_specs(const std::vector<PositionSpec>& specs) {
    ParityGame g;
    g.n_ = int(specs.size());
    if (g.n_ == 0) throw ParseError("game has no positions");

    std::unordered_map<int64_t, Pos> dense;
    dense.reserve(specs.size());
    for (size_t i = 0; i < specs.size(); ++i) {
        if (!dense.emplace(specs[i].id, Pos(i)).second)
            throw ParseError("duplicate position id " + std::to_string(specs[i].id));
    }

    g.priority_.resize(g.n_);
    g.owner_.resize(g.n_);
    g.original_id_.resize(g.n_);
    g.name_.resize(g.n_);
    g.succ_off_.assign(g.n_ + 1, 0);

    std::vector<std::vector<Pos>> succ(g.n_);
    for (size_t i = 0; i < specs.size(); ++i) {
        const PositionSpec& s = specs[i];
        if (s.priority < 0)
            throw ParseError("negative priority on position " + std::to_string(s.id));
        if (s.owner != 0 && s.owner != 1)
            throw ParseError("owner of position " + std::to_string(s.id) +
                             " is " + std::to_string(s.owner) + ", expected 0 or 1");
        if (s.successors.empty())
            throw ParseError("position " + std::to_string(s.id) + " has no moves");
        g.priority_[i] = s.priority;
        g.owner_[i] = uint8_t(s.owner);
        g.original_id_[i] = s.id;
        g.name_[i] = s.name;
        g.max_priority_ = std::max(g.max_priority_, s.priority);
        for (int64_t t : s.successors) {
            auto it = dense.find(t);
            if (it == dense.end())
                throw ParseError("position " + std::to_string(s.id) +
                                 " has a move to undeclared id " + std::to_string(t));
            succ[i].push_back(it->second);
        }
        std::sort(succ[i].begin(), succ[i].end());
        succ[i].erase(std::unique(succ[i].begin(), succ[i].end()), succ[i].end());
    }

    for (int v = 0; v < g.n_; ++v) g.succ_off_[v + 1] = g.succ_off_[v] + int32_t(succ[v].size());
    g.succ_.reserve(g.succ_off_[g.n_]);
    for (int v = 0; v < g.n_; ++v) g.succ_.insert(g.succ_.end(), succ[v].begin(), succ[v].end());

    // Predecessor CSR, sorted by construction (outer loop ascending).
    g.pred_off_.assign(g.n_ + 1, 0);
    for (Pos w : g.succ_) g.pred_off_[w + 1]++;
    for (int v = 0; v < g.n_; ++v) g.pred_off_[v + 1] += g.pred_off_[v];
    g.pred_.resize(g.succ_.size());
    std::vector<int32_t> fill(g.pred_off_.begin(), g.pred_off_.end() - 1);
    for (int v = 0; v < g.n_; ++v)
        for (Pos w : g.successors(v)) g.pred_[fill[w]++] = v;

    return g;
}

bool ParityGame::has_move(Pos v, Pos w) const {
    auto s = successors(v);
    return std::binary_search(s.begin(), s.end(), w);
}

int ParityGame::distinct_priorities() const {
    std::vector<uint8_t> seen(max_priority_ + 1, 0);
    int c = 0;
    for (int p : priority_)
        if (!seen[p]) {
            seen[p] = 1;
            ++c;
        }
    return c;
}

bool ParityGame::structurally_equal(const ParityGame& o) const {
    return n_ == o.n_ && priority_ == o.priority_ && owner_ == o.owner_ &&
           succ_off_ == o.succ_off_ && succ_ == o.succ_ &&
           original_id_ == o.original_id_;
}

PositionSet ParityGame::owned_by(int player) const {
    PositionSet s(n_);
    for (int v = 0; v < n_; ++v)
        if (owner_[v] == player) s.set(v);
    return s;
}

PositionSet ParityGame::with_priority(int priority) const {
    PositionSet s(n_);
    for (int v = 0; v < n_; ++v)
        if (priority_[v] == priority) s.set(v);
    return s;
}

namespace {

struct Tokenizer {
    std::istream& in;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line) + ": " + msg);
    }

    /** Next non-space, non-comment char; -1 at EOF. Does not consume. */
    int peek() {
        while (true) {
            int c = in.peek();
            if (c == '%') {
                while (c != EOF && c != '\n') c = in.get();
                continue;
            }
            if (c == '\n') {
                ++line;
                in.get();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                in.get();
                continue;
            }
            return c;
        }
    }
    int get() {
        int c = peek();
        if (c != EOF) in.get();
        return c;
    }

    int64_t number() {
        int c = peek();
        if (c == EOF || !std::isdigit(c)) fail("expected a number");
        int64_t x = 0;
        while (std::isdigit(in.peek())) {
            x = x * 10 + (in.get() - '0');
            if (x > (int64_t(1) << 60)) fail("number out of range");
        }
        return x;
    }

    std::string word() {
        peek();
        std::string w;
        while (std::isalpha(in.peek())) w.push_back(char(in.get()));
        return w;
    }
};

}  // namespace

ParityGame ParityGame::parse_pgsolver(std::istream& in) {
    Tokenizer tk{in};
    std::vector<PositionSpec> specs;

    int c = tk.peek();
    if (c != EOF && std::isalpha(c)) {
        std::string kw = tk.word();
        if (kw != "parity") tk.fail("unknown header '" + kw + "'");
        tk.number();  // declared max id: informational only
        if (tk.get() != ';') tk.fail("expected ';' after header");
    }

    while (tk.peek() != EOF) {
        PositionSpec s;
        s.id = tk.number();
        s.priority = int(tk.number());
        int64_t owner = tk.number();
        s.owner = int(owner);
        if (owner != 0 && owner != 1)
            tk.fail("owner of position " + std::to_string(s.id) + " is " +
                    std::to_string(owner) + ", expected 0 or 1");
        while (true) {
            s.successors.push_back(tk.number());
            if (tk.peek() == ',') {
                tk.get();
                continue;
            }
            break;
        }
        if (tk.peek() == '"') {
            tk.get();
            std::string name;
            while (true) {
                int ch = tk.in.get();
                if (ch == EOF) tk.fail("unterminated name string");
                if (ch == '"') break;
                if (ch == '\n') ++tk.line;
                name.push_back(char(ch));
            }
            s.name = name;
        }
        if (tk.get() != ';') tk.fail("expected ';' after position " + std::to_string(s.id));
        specs.push_back(std::move(s));
    }

    if (specs.empty()) throw ParseError("input declares no positions");
    try {
        return from_specs(specs);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()));
    }
}

ParityGame ParityGame::parse_pgsolver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_pgsolver(in);
}

void ParityGame::write_pgsolver(std::ostream& out) const {
    int64_t max_id = 0;
    for (int64_t id : original_id_) max_id = std::max(max_id, id);
    out << "parity " << max_id << ";\n";
    for (int v = 0; v < n_; ++v) {
        out << original_id_[v] << ' ' << priority_[v] << ' ' << int(owner_[v]) << ' ';
        auto s = successors(v);
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out << ',';
            out << original_id_[s[i]];
        }
        if (!name_[v].empty()) out << " \"" << name_[v] << '"';
        out << ";\n";
    }
}

PositionSet pre(const ParityGame& g, int player, const PositionSet& V,
                const PositionSet* ambient) {
    const int n = g.size();
    PositionSet r(n);
    for (int v = 0; v < n; ++v) {
        if (ambient && !ambient->test(v)) continue;
        bool any = false, all = true, have = false;
        for (Pos w : g.successors(v)) {
            if (ambient && !ambient->test(w)) continue;
            have = true;
            if (V.test(w))
                any = true;
            else
                all = false;
        }
        assert(have && "subgame has a sink position");
        (void)have;
        if (g.owner(v) == player ? any : all) r.set(v);
    }
    return r;
}

PositionSet attractor(const ParityGame& g, int player, const PositionSet& base,
                      const PositionSet* pool, const PositionSet* ambient,
                      Strategy* strategy) {
    const int n = g.size();
    PositionSet A = base;
    std::vector<Pos> work;
    base.for_each([&](int v) { work.push_back(v); });

    // For opponent positions: number of ambient moves whose target has not
    // been dequeued yet.  Counting against dequeued (not merely enqueued)
    // targets keeps the count in lockstep with the notifications below:
    // each dequeue of a successor sends exactly one decrement.
    std::vector<int32_t> out(n, -1);
    std::vector<uint8_t> popped(n, 0);

    size_t qh = 0;
    while (qh < work.size()) {
        Pos w = work[qh++];
        popped[w] = 1;
        for (Pos v : g.predecessors(w)) {
            if (A.test(v)) continue;
            if (ambient && !ambient->test(v)) continue;
            if (pool && !pool->test(v)) continue;
            if (g.owner(v) == player) {
                A.set(v);
                work.push_back(v);
                if (strategy) strategy->set(v, w);
            } else {
                if (out[v] < 0) {
                    int32_t c = 0;
                    for (Pos u : g.successors(v))
                        if ((!ambient || ambient->test(u)) && !popped[u]) ++c;
                    out[v] = c;
                } else {
                    --out[v];
                }
                if (out[v] == 0) {
                    A.set(v);
                    work.push_back(v);
                }
            }
        }
    }
    return A;
}

PositionSet escape(const ParityGame& g, int player, const PositionSet& V,
                   const PositionSet* ambient) {
    PositionSet r(g.size());
    V.for_each([&](int v) {
        assert(!ambient || ambient->test(v));
        bool any_out = false, all_out = true, have = false;
        for (Pos w : g.successors(v)) {
            if (ambient && !ambient->test(w)) continue;
            have = true;
            if (V.test(w))
                all_out = false;
            else
                any_out = true;
        }
        assert(have && "escape evaluated in a subgame with sinks");
        (void)have;
        if (g.owner(v) == player ? any_out : all_out) r.set(v);
    });
    return r;
}

ExtPriority max_priority_in(const ParityGame& g, const PositionSet& within) {
    int best = -1;
    within.for_each([&](int v) { best = std::max(best, g.priority(v)); });
    return best < 0 ? ExtPriority::bot() : ExtPriority::nat(best);
}

bool is_sink_free(const ParityGame& g, const PositionSet& within) {
    bool ok = true;
    within.for_each([&](int v) {
        bool have = false;
        for (Pos w : g.successors(v))
            if (within.test(w)) {
                have = true;
                break;
            }
        ok = ok && have;
    });
    return ok;
}

ParityGame induced_subgame(const ParityGame& g, const PositionSet& keep) {
    assert(is_sink_free(g, keep));
    std::vector<PositionSpec> specs;
    specs.reserve(size_t(keep.count()));
    keep.for_each([&](int v) {
        PositionSpec s;
        s.id = v;
        s.priority = g.priority(v);
        s.owner = g.owner(v);
        for (Pos w : g.successors(v))
            if (keep.test(w)) s.successors.push_back(w);
        s.name = g.name(v);
        specs.push_back(std::move(s));
    });
    return ParityGame::from_specs(specs);
}

}  // namespace pariton

#include "mixr/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "mixr/error.hpp"

namespace mixr {

// ---------------------------------------------------------------------------
// RotationalModel

RotationalModel::RotationalModel(std::uint32_t q) : q_(q), n_(levi_order(q)) {
    if (q > kMaxSearchOrder) throw InputError("rotational search supports q <= " + std::to_string(kMaxSearchOrder));
    const auto plane = build_plane(q);
    levi_ = levi_graph(plane);
    labeling_ = rotational_cycle(plane);

    const auto& order = labeling_.order;
    auto is_star = [&](int w, std::uint32_t d) {
        return levi_.graph.adjacent(order[static_cast<std::uint32_t>(w)], order[(static_cast<std::uint32_t>(w) + d) % n_]);
    };
    // Union-find over the 2n slots; slot (w, d) is tied to the same edge seen
    // from the other end.
    std::vector<int> parent(2 * n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int w = 0; w < 2; ++w)
        for (std::uint32_t d = 1; d < n_; ++d) {
            const int other = d % 2 == 0 ? w : 1 - w;
            const int a = find(static_cast<int>(w * n_ + d));
            const int b = find(static_cast<int>(other * n_ + (n_ - d)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    slot_class_.assign(2 * n_, kStarClass);
    std::vector<std::vector<WordSlot>> groups(2 * n_);
    for (int w = 0; w < 2; ++w)
        for (std::uint32_t d = 1; d < n_; ++d)
            if (!is_star(w, d)) groups[find(static_cast<int>(w * n_ + d))].push_back({w, d});
    auto by_offset = [](const WordSlot& a, const WordSlot& b) {
        return std::pair{a.offset, a.word} < std::pair{b.offset, b.word};
    };
    for (auto& g : groups) {
        if (g.empty()) continue;
        std::sort(g.begin(), g.end(), by_offset);
        classes_.push_back(std::move(g));
    }
    std::sort(classes_.begin(), classes_.end(),
              [&](const auto& a, const auto& b) { return by_offset(a.front(), b.front()); });
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (const auto& s : classes_[c]) slot_class_[s.word * n_ + s.offset] = static_cast<int>(c);
}

int RotationalModel::edge_class(std::uint32_t i, std::uint32_t j) const {
    if (i == j || i >= n_ || j >= n_) throw InputError("invalid position pair");
    return slot_class(static_cast<int>(i % 2), (j + n_ - i) % n_);
}

WordPair RotationalModel::words(std::span<const std::uint8_t> assignment) const {
    if (assignment.size() != classes_.size()) throw InputError("assignment has the wrong number of classes");
    WordPair w{q_, std::string(n_ - 1, kStar), std::string(n_ - 1, kStar)};
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (const auto& s : classes_[c]) (s.word ? w.w1 : w.w0)[s.offset - 1] = palette_symbol(assignment[c]);
    return w;
}

std::optional<std::vector<std::uint8_t>> RotationalModel::assignment(const WordPair& words) const {
    if (words.q != q_ || words.w0.size() != n_ - 1 || words.w1.size() != n_ - 1) return std::nullopt;
    for (int w = 0; w < 2; ++w)
        for (std::uint32_t d = 1; d < n_; ++d)
            if ((words.at(w, d) == kStar) != (slot_class(w, d) == kStarClass)) return std::nullopt;
    std::vector<std::uint8_t> out(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& front = classes_[c].front();
        const auto id = palette_id(words.at(front.word, front.offset));
        if (!id) return std::nullopt;
        for (const auto& s : classes_[c])
            if (palette_id(words.at(s.word, s.offset)) != id) return std::nullopt;
        out[c] = static_cast<std::uint8_t>(*id);
    }
    return out;
}

namespace {

// Enumerates k-sets through `root` with all other members above `root` and,
// for root 1, excluding position 0. `accept_edge` filters pairs as sets grow.
template <typename AcceptEdge, typename Visit>
void for_each_set_through(std::uint32_t n, std::uint32_t root, std::uint32_t k, AcceptEdge accept_edge, Visit visit) {
    std::vector<std::uint32_t> chosen{root};
    auto rec = [&](auto&& self, std::uint32_t from) -> void {
        if (chosen.size() == k) {
            visit(chosen);
            return;
        }
        for (std::uint32_t v = from; v < n; ++v) {
            if (n - v < k - chosen.size()) break;
            bool ok = true;
            for (auto u : chosen)
                if (!accept_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, root + 1);
}

void sort_unique(std::vector<std::vector<int>>& sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

std::vector<std::vector<int>> RotationalModel::palette_cliques(std::uint32_t m) const {
    std::vector<std::vector<int>> out;
    if (m > n_) return out;
    auto palette_edge = [&](std::uint32_t u, std::uint32_t v) { return edge_class(u, v) != kStarClass; };
    for (std::uint32_t root : {0u, 1u}) {
        for_each_set_through(n_, root, m, palette_edge, [&](const std::vector<std::uint32_t>& s) {
            std::vector<int> cls;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) cls.push_back(edge_class(s[a], s[b]));
            std::sort(cls.begin(), cls.end());
            cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
            out.push_back(std::move(cls));
        });
    }
    sort_unique(out);
    return out;
}

std::vector<std::vector<int>> RotationalModel::rainbow_candidates(std::uint32_t t) const {
    std::vector<std::vector<int>> out;
    if (n_ < 4) return out;
    auto any_edge = [](std::uint32_t, std::uint32_t) { return true; };
    for (std::uint32_t root : {0u, 1u}) {
        for_each_set_through(n_, root, 4, any_edge, [&](const std::vector<std::uint32_t>& s) {
            std::vector<int> cls;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    const int c = edge_class(s[a], s[b]);
                    if (c != kStarClass) cls.push_back(c);
                }
            if (cls.size() > t) return;
            std::sort(cls.begin(), cls.end());
            if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) return;
            out.push_back(std::move(cls));
        });
    }
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------
// Modes and checkpoints

std::string to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::first: return "first";
        case SearchMode::all: return "all";
        case SearchMode::count: return "count";
    }
    return "?";
}

SearchMode parse_search_mode(const std::string& s) {
    if (s == "first") return SearchMode::first;
    if (s == "all") return SearchMode::all;
    if (s == "count") return SearchMode::count;
    throw InputError("unknown search mode '" + s + "'");
}

void write_checkpoint(std::ostream& os, const Checkpoint& cp) {
    os << "mixr-checkpoint 1\n"
       << "q " << cp.q << '\n'
       << "m " << cp.m << '\n'
       << "palette " << cp.palette << '\n'
       << "mode " << to_string(cp.mode) << '\n'
       << "break-symmetry " << (cp.break_symmetry ? 1 : 0) << '\n'
       << "nodes " << cp.nodes << '\n'
       << "solutions " << cp.solutions << '\n'
       << "stack";
    for (auto v : cp.stack) os << ' ' << static_cast<unsigned>(v);
    os << '\n';
}

Checkpoint read_checkpoint(std::istream& is) {
    auto line_of = [&](const std::string& key) {
        std::string line;
        if (!std::getline(is, line)) throw InputError("checkpoint ends before '" + key + "'");
        std::istringstream ss(line);
        std::string k;
        ss >> k;
        if (k != key) throw InputError("checkpoint: expected '" + key + "', got '" + line + "'");
        std::string rest;
        std::getline(ss, rest);
        return rest;
    };
    auto number = [](const std::string& s) {
        std::istringstream ss(s);
        std::uint64_t v = 0;
        std::string extra;
        if (!(ss >> v) || (ss >> extra)) throw InputError("checkpoint: malformed number '" + s + "'");
        return v;
    };
    std::string header;
    if (!std::getline(is, header) || header != "mixr-checkpoint 1") throw InputError("not a checkpoint file");
    Checkpoint cp;
    cp.q = static_cast<std::uint32_t>(number(line_of("q")));
    cp.m = static_cast<std::uint32_t>(number(line_of("m")));
    cp.palette = static_cast<std::uint32_t>(number(line_of("palette")));
    {
        std::istringstream ss(line_of("mode"));
        std::string mode;
        ss >> mode;
        cp.mode = parse_search_mode(mode);
    }
    cp.break_symmetry = number(line_of("break-symmetry")) != 0;
    cp.nodes = number(line_of("nodes"));
    cp.solutions = number(line_of("solutions"));
    std::istringstream ss(line_of("stack"));
    unsigned v = 0;
    while (ss >> v) {
        if (v >= kMaxPalette) throw InputError("checkpoint: stack value out of range");
        cp.stack.push_back(static_cast<std::uint8_t>(v));
    }
    if (!ss.eof()) throw InputError("checkpoint: malformed stack");
    return cp;
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

struct Problem {
    const RotationalModel& model;
    std::uint32_t m;
    std::uint32_t palette;
    SearchMode mode;
    bool break_symmetry;
    std::vector<std::vector<int>> mono;     // class sets that must not be constant
    std::vector<std::vector<int>> rainbow;  // class sets that must not be all distinct
    std::vector<std::vector<std::uint32_t>> mono_at;
    std::vector<std::vector<std::uint32_t>> rainbow_at;

    Problem(const RotationalModel& mdl, const SearchConfig& cfg)
        : model(mdl), m(cfg.m), palette(cfg.palette), mode(cfg.mode), break_symmetry(cfg.break_symmetry),
          mono(mdl.palette_cliques(cfg.m)), rainbow(mdl.rainbow_candidates(cfg.palette)),
          mono_at(mdl.class_count()), rainbow_at(mdl.class_count()) {
        // Each set is checked once, when its last class in branching order is assigned.
        for (std::uint32_t i = 0; i < mono.size(); ++i) mono_at[static_cast<std::size_t>(mono[i].back())].push_back(i);
        for (std::uint32_t i = 0; i < rainbow.size(); ++i)
            rainbow_at[static_cast<std::size_t>(rainbow[i].back())].push_back(i);
    }

    [[nodiscard]] std::uint32_t depth() const { return static_cast<std::uint32_t>(model.class_count()); }

    [[nodiscard]] bool consistent(std::uint32_t cls, const std::vector<std::uint8_t>& values) const {
        for (auto id : mono_at[cls]) {
            const auto& set = mono[id];
            const auto v0 = values[static_cast<std::size_t>(set.front())];
            bool constant = true;
            for (auto c : set)
                if (values[static_cast<std::size_t>(c)] != v0) {
                    constant = false;
                    break;
                }
            if (constant) return false;
        }
        for (auto id : rainbow_at[cls]) {
            const auto& set = rainbow[id];
            std::uint64_t seen = 0;
            bool distinct = true;
            for (auto c : set) {
                const auto bit = std::uint64_t{1} << values[static_cast<std::size_t>(c)];
                if (seen & bit) {
                    distinct = false;
                    break;
                }
                seen |= bit;
            }
            if (distinct) return false;
        }
        return true;
    }

    // Full re-check of a leaf on the expanded colouring.
    void verify_leaf(const WordPair& words) const {
        const auto sc = expand_words(model.levi(), model.labeling(), words);
        const auto report = is_admissible(sc.base, m);
        if (!report.admissible || !is_special(sc.base, sc.levi, sc.embedding()))
            throw std::logic_error("search emitted words that fail the full admissibility check");
    }
};

struct Found {
    std::uint64_t node;  // 1-based node index within the run that found it
    WordPair words;
};

struct WorkItem {
    std::vector<std::uint8_t> prefix;
    bool on_resume_path = false;
};

struct Event {
    bool is_item = false;
    std::size_t item = 0;
    std::vector<std::uint8_t> path;  // for node events
};

class Engine {
public:
    Engine(const Problem& p, std::uint64_t cap, const std::vector<std::uint8_t>* resume)
        : p_(p), cap_(cap), resume_(resume), values_(p.depth(), 0) {}

    // Skeleton mode: stop at `split` and record work items instead of descending.
    void set_split(std::uint32_t split, std::vector<WorkItem>* items, std::vector<Event>* events) {
        split_ = split;
        items_ = items;
        events_ = events;
    }

    void run(const std::vector<std::uint8_t>& prefix, bool on_resume_path) {
        std::copy(prefix.begin(), prefix.end(), values_.begin());
        int max_used = -1;
        for (auto v : prefix) max_used = std::max(max_used, static_cast<int>(v));
        explore(static_cast<std::uint32_t>(prefix.size()), on_resume_path, max_used);
    }

    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
    [[nodiscard]] bool stopped() const { return stopped_; }
    [[nodiscard]] const std::vector<std::uint8_t>& stop_path() const { return stop_path_; }
    [[nodiscard]] std::vector<Found>& found() { return found_; }
    [[nodiscard]] std::uint64_t count() const { return count_; }

private:
    void explore(std::uint32_t depth, bool on_path, int max_used) {
        if (split_ && depth == *split_) {
            events_->push_back({true, items_->size(), {}});
            items_->push_back({{values_.begin(), values_.begin() + depth}, on_path});
            return;
        }
        const bool resume_here = on_path && resume_ != nullptr && depth < resume_->size();
        const bool ancestor_level = resume_here && depth + 1 < resume_->size();
        const int start = resume_here ? (*resume_)[depth] : 0;
        int upper = static_cast<int>(p_.palette) - 1;
        if (p_.break_symmetry) upper = std::min(upper, max_used + 1);
        for (int v = start; v <= upper; ++v) {
            values_[depth] = static_cast<std::uint8_t>(v);
            const bool ancestor = ancestor_level && v == start;
            if (!ancestor) {
                if (nodes_ >= cap_) {
                    stopped_ = true;
                    stop_path_.assign(values_.begin(), values_.begin() + depth + 1);
                    return;
                }
                ++nodes_;
                if (events_) events_->push_back({false, 0, {values_.begin(), values_.begin() + depth + 1}});
                if (!p_.consistent(depth, values_)) continue;
            }
            if (depth + 1 == p_.depth()) {
                leaf();
                if (done_) return;
                continue;
            }
            explore(depth + 1, ancestor, std::max(max_used, v));
            if (stopped_ || done_) return;
        }
    }

    void leaf() {
        ++count_;
        if (p_.mode == SearchMode::count) {
            p_.verify_leaf(p_.model.words(values_));
            return;
        }
        auto words = p_.model.words(values_);
        p_.verify_leaf(words);
        found_.push_back({nodes_, std::move(words)});
        if (p_.mode == SearchMode::first) done_ = true;
    }

    const Problem& p_;
    std::uint64_t cap_;
    const std::vector<std::uint8_t>* resume_;
    std::vector<std::uint8_t> values_;
    std::optional<std::uint32_t> split_;
    std::vector<WorkItem>* items_ = nullptr;
    std::vector<Event>* events_ = nullptr;
    std::uint64_t nodes_ = 0;
    std::uint64_t count_ = 0;
    bool stopped_ = false;
    bool done_ = false;
    std::vector<std::uint8_t> stop_path_;
    std::vector<Found> found_;
};

struct ItemResult {
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    bool stopped = false;
    bool skipped = false;
    std::vector<Found> found;
};

void validate(const RotationalModel& model, const SearchConfig& cfg) {
    if (cfg.q != model.q()) throw InputError("search config and model disagree on q");
    if (cfg.m < 3) throw InputError("clique size m must be at least 3");
    if (cfg.palette < 1 || cfg.palette > kMaxPalette) throw InputError("palette size must be in 1..36");
    if (cfg.threads < 1) throw InputError("thread count must be at least 1");
    if (const auto& r = cfg.resume) {
        if (r->q != cfg.q || r->m != cfg.m || r->palette != cfg.palette || r->mode != cfg.mode ||
            r->break_symmetry != cfg.break_symmetry)
            throw InputError("checkpoint was written for a different search configuration");
        if (r->stack.empty() || r->stack.size() > model.class_count())
            throw InputError("checkpoint stack has an invalid depth");
        for (auto v : r->stack)
            if (v >= cfg.palette) throw InputError("checkpoint stack value exceeds the palette");
    }
}

std::uint32_t choose_split(const SearchConfig& cfg, std::uint32_t depth) {
    if (cfg.split_depth) return std::min(*cfg.split_depth, depth - 1);
    if (cfg.threads <= 1) return 0;
    std::uint32_t s = 0;
    std::uint64_t items = 1;
    while (items < 4ull * cfg.threads && s + 1 < depth && cfg.palette > 1) {
        items *= cfg.palette;
        ++s;
    }
    return s;
}

}  // namespace

SearchOutcome search_rotational(const SearchConfig& config) {
    const RotationalModel model(config.q);
    return search_rotational(model, config);
}

SearchOutcome search_rotational(const RotationalModel& model, const SearchConfig& config) {
    validate(model, config);
    const Problem problem(model, config);
    const auto depth = problem.depth();
    if (depth == 0) throw std::logic_error("model has no free classes");
    const std::uint64_t budget = config.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
    const std::vector<std::uint8_t>* resume = config.resume ? &config.resume->stack : nullptr;

    // Skeleton: nodes above the split depth, in depth-first order, interleaved
    // with the work items below them.
    std::vector<WorkItem> items;
    std::vector<Event> events;
    {
        Engine skeleton(problem, std::numeric_limits<std::uint64_t>::max(), resume);
        skeleton.set_split(choose_split(config, depth), &items, &events);
        skeleton.run({}, resume != nullptr);
    }

    std::vector<ItemResult> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < items.size() && !failed; i = next++) {
                if (config.mode == SearchMode::first && i > first_hit.load()) {
                    results[i].skipped = true;
                    continue;
                }
                Engine e(problem, budget, items[i].on_resume_path ? resume : nullptr);
                e.run(items[i].prefix, items[i].on_resume_path);
                results[i] = {e.nodes(), e.count(), e.stopped(), false, std::move(e.found())};
                if (config.mode == SearchMode::first && e.count() > 0) {
                    auto cur = first_hit.load();
                    while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };
    const auto nthreads = std::max<std::uint32_t>(1, std::min<std::uint32_t>(config.threads, static_cast<std::uint32_t>(items.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in depth-first order so the outcome matches a sequential run.
    SearchOutcome out;
    std::uint64_t used = 0;
    std::optional<std::vector<std::uint8_t>> stop_at;
    bool found_first = false;
    for (const auto& ev : events) {
        if (!ev.is_item) {
            if (used >= budget) {
                stop_at = ev.path;
                break;
            }
            ++used;
            continue;
        }
        auto& r = results[ev.item];
        if (r.skipped) throw std::logic_error("merge reached a skipped work item");
        if (r.stopped || used + r.nodes > budget) {
            Engine e(problem, budget - used, items[ev.item].on_resume_path ? resume : nullptr);
            e.run(items[ev.item].prefix, items[ev.item].on_resume_path);
            r = {e.nodes(), e.count(), e.stopped(), false, std::move(e.found())};
            if (e.stopped()) stop_at = e.stop_path();
        }
        used += r.nodes;
        out.solution_count += r.count;
        for (auto& f : r.found) out.solutions.push_back(std::move(f.words));
        if (stop_at) break;
        if (config.mode == SearchMode::first && r.count > 0) {
            found_first = true;
            break;
        }
    }

    const std::uint64_t prior_nodes = config.resume ? config.resume->nodes : 0;
    const std::uint64_t prior_solutions = config.resume ? config.resume->solutions : 0;
    out.nodes_explored = prior_nodes + used;
    out.solution_count += prior_solutions;
    out.exhausted = !stop_at && !found_first;
    if (stop_at) {
        out.checkpoint = Checkpoint{config.q,    config.m,       config.palette, config.mode, config.break_symmetry,
                                    out.nodes_explored, out.solution_count, *stop_at};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word verification

WordsReport verify_words(std::uint32_t q, const WordPair& words, std::uint32_t m) {
    if (words.q != q) throw InputError("word file is for q=" + std::to_string(words.q) + ", expected q=" + std::to_string(q));
    const auto sc = expand_words(words);
    WordsReport r;
    r.admissibility = is_admissible(sc.base, m);
    r.special = is_special(sc.base, sc.levi, sc.embedding());
    r.rotational = is_rotational(sc);
    r.colours = r.admissibility.colour_count;
    r.reverse_property = words.reverse_property();
    return r;
}

void write_words_report(std::ostream& os, const WordsReport& report) {
    write_report(os, report.admissibility);
    os << "special " << (report.special ? "true" : "false") << '\n'
       << "rotational " << (report.rotational ? "true" : "false") << '\n'
       << "reverse " << (report.reverse_property ? "true" : "false") << '\n';
}

}  // namespace mixr

#include "finf/statesum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace finf {

std::vector<int> TangleDiagram::profile() const {
    std::vector<int> p{1};
    for (const auto& e : events) {
        int k = p.back();
        if (e.kind == EventKind::Cup) k += 2;
        if (e.kind == EventKind::Cap) k -= 2;
        p.push_back(k);
    }
    return p;
}

int TangleDiagram::crossing_count() const {
    int c = 0;
    for (const auto& e : events) c += e.kind == EventKind::Crossing;
    return c;
}

int TangleDiagram::writhe() const {
    int w = 0;
    for (const auto& e : events)
        if (e.kind == EventKind::Crossing) w += e.sign;
    return w;
}

std::string TangleDiagram::str() const {
    std::ostringstream os;
    for (const auto& e : events) {
        switch (e.kind) {
            case EventKind::Crossing: os << "X " << e.pos << ' ' << (e.sign > 0 ? '+' : '-'); break;
            case EventKind::Cap: os << "CAP " << e.pos << ' ' << (e.rightward ? 'r' : 'l'); break;
            case EventKind::Cup: os << "CUP " << e.pos << ' ' << (e.rightward ? 'r' : 'l'); break;
        }
        os << '\n';
    }
    return os.str();
}

TangleDiagram parse_diagram(const std::string& text) {
    TangleDiagram D;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind, flag;
        int pos = 0;
        if (!(ls >> kind)) continue;
        if (kind[0] == '#') continue;
        if (!(ls >> pos >> flag) || pos < 1)
            throw DiagramError("line " + std::to_string(lineno) + ": expected '<KIND> <pos> <flag>'");
        Event e{EventKind::Crossing, pos};
        if (kind == "X") {
            if (flag != "+" && flag != "-") throw DiagramError("line " + std::to_string(lineno) + ": crossing sign must be + or -");
            e.sign = flag == "+" ? 1 : -1;
        } else if (kind == "CAP" || kind == "CUP") {
            if (flag != "l" && flag != "r") throw DiagramError("line " + std::to_string(lineno) + ": orientation must be l or r");
            e.kind = kind == "CAP" ? EventKind::Cap : EventKind::Cup;
            e.rightward = flag == "r";
        } else {
            throw DiagramError("line " + std::to_string(lineno) + ": unknown event " + kind);
        }
        D.events.push_back(e);
    }
    return D;
}

TangleDiagram braid_closure_diagram(const BraidWord& beta) {
    require_knot(beta);
    TangleDiagram D;
    const int n = beta.strands;
    for (int k = 2; k <= n; ++k) D.events.push_back({EventKind::Cup, k, 1, false});
    // The bottom of the diagram is the letter that acts first.
    for (auto it = beta.letters.rbegin(); it != beta.letters.rend(); ++it)
        D.events.push_back({EventKind::Crossing, std::abs(*it), *it > 0 ? 1 : -1, false});
    for (int k = n; k >= 2; --k) D.events.push_back({EventKind::Cap, k, 1, true});
    return D;
}

std::vector<WalkStep> walk(const TangleDiagram& D) {
    const auto prof = D.profile();
    const int T = static_cast<int>(D.events.size());
    for (int t = 0; t < T; ++t) {
        const Event& e = D.events[t];
        const int k = prof[t];
        const int need = e.kind == EventKind::Cup ? e.pos - 1 : e.pos + 1;
        if (prof[t] < 0 || need > k) throw DiagramError("event " + std::to_string(t + 1) + " out of range");
    }
    if (prof.back() != 1) throw DiagramError("diagram must end with a single strand");

    std::vector<int> ordinal(T, -1);
    int nc = 0;
    for (int t = 0; t < T; ++t)
        if (D.events[t].kind == EventKind::Crossing) ordinal[t] = nc++;

    std::vector<WalkStep> steps;
    std::vector<int> visits(nc, 0);
    int level = 0, pos = 1;
    bool up = true;
    const size_t guard = 4 * D.events.size() + 4;
    while (true) {
        if (steps.size() > guard) throw DiagramError("walk does not terminate");
        if (up) {
            if (level == T) break;
            const Event& e = D.events[level];
            switch (e.kind) {
                case EventKind::Crossing:
                    if (pos == e.pos || pos == e.pos + 1) {
                        const bool left = pos == e.pos;
                        // Positive: the left input loses i; negative: the left input gains i.
                        const bool gains = (e.sign > 0) != left;
                        steps.push_back({gains ? WalkStep::CrossingF : WalkStep::CrossingE, ordinal[level], level});
                        ++visits[ordinal[level]];
                        pos = left ? e.pos + 1 : e.pos;
                    }
                    ++level;
                    break;
                case EventKind::Cup:
                    if (pos >= e.pos) pos += 2;
                    ++level;
                    break;
                case EventKind::Cap:
                    if (pos == e.pos || pos == e.pos + 1) {
                        const bool rightward = pos == e.pos;
                        if (rightward != e.rightward)
                            throw DiagramError("cap orientation at event " + std::to_string(level + 1) + " disagrees with the strand");
                        steps.push_back({WalkStep::CapArc, -1, level, rightward});
                        pos = rightward ? e.pos + 1 : e.pos;
                        up = false;
                    } else {
                        if (pos > e.pos + 1) pos -= 2;
                        ++level;
                    }
                    break;
            }
        } else {
            if (level == 0) throw DiagramError("strand leaves the diagram through the bottom");
            const Event& e = D.events[level - 1];
            switch (e.kind) {
                case EventKind::Crossing:
                    if (pos == e.pos || pos == e.pos + 1)
                        throw DiagramError("crossing at event " + std::to_string(level) + " involves a downward strand (unsupported)");
                    --level;
                    break;
                case EventKind::Cup:
                    if (pos == e.pos || pos == e.pos + 1) {
                        const bool rightward = pos == e.pos;
                        if (rightward != e.rightward)
                            throw DiagramError("cup orientation at event " + std::to_string(level) + " disagrees with the strand");
                        steps.push_back({WalkStep::CupArc, -1, level - 1, rightward});
                        pos = rightward ? e.pos + 1 : e.pos;
                        up = true;
                    } else {
                        if (pos > e.pos + 1) pos -= 2;
                        --level;
                    }
                    break;
                case EventKind::Cap:
                    if (pos >= e.pos) pos += 2;
                    --level;
                    break;
            }
        }
    }
    size_t arcs = 0, turns = 0;
    for (const auto& e : D.events) arcs += e.kind != EventKind::Crossing;
    for (const auto& st : steps) turns += st.kind == WalkStep::CapArc || st.kind == WalkStep::CupArc;
    for (int c = 0; c < nc; ++c)
        if (visits[c] != 2) throw DiagramError("diagram is not a single-component (1,1)-tangle");
    if (turns != arcs) throw DiagramError("diagram has a closed component");
    return steps;
}

BivariateLaurent evaluate_state(const TangleDiagram& D, const StateAssignment& state) {
    const auto steps = walk(D);
    const int nc = D.crossing_count();
    if (static_cast<int>(state.size()) != nc) throw DiagramError("state length differs from crossing count");
    std::vector<int> sign(nc), a(nc, -1), b(nc, -1);
    {
        int k = 0;
        for (const auto& e : D.events)
            if (e.kind == EventKind::Crossing) sign[k++] = e.sign;
    }
    BivariateLaurent w(1);
    int label = 0;
    for (const auto& st : steps) {
        switch (st.kind) {
            case WalkStep::CrossingF:
                a[st.crossing] = label;
                label += state[st.crossing];
                break;
            case WalkStep::CrossingE:
                b[st.crossing] = label;
                if (label < state[st.crossing]) throw DiagramError("inconsistent state: label becomes negative");
                label -= state[st.crossing];
                break;
            case WalkStep::CapArc:
                if (st.counted) w = w.scaled({-2 * label, 1}, Int(1));
                break;
            case WalkStep::CupArc:
                if (st.counted) w = w.scaled({2 * label, -1}, Int(1));
                break;
        }
    }
    if (label != 0) throw DiagramError("inconsistent state: top label is not 0");
    for (int k = 0; k < nc; ++k) {
        if (state[k] < 0) throw DiagramError("negative state index");
        const auto& c = crossing_coeff(sign[k], a[k], b[k], state[k]);
        if (c.is_zero()) return {};
        w *= c;
    }
    return w;
}

size_t enumerate_states(const TangleDiagram& D, int B, std::vector<StateAssignment>* out) {
    const auto steps = walk(D);
    const int nc = D.crossing_count();
    int cups = 0;
    for (const auto& e : D.events) cups += e.kind == EventKind::Cup;
    // Upward labels at any level sum to the downward ones, each an arc label <= B.
    const int cap = cups * B;
    StateAssignment st(nc, -1);
    size_t count = 0;
    std::function<void(size_t, int)> dfs = [&](size_t idx, int label) {
        if (idx == steps.size()) {
            if (label != 0) return;
            ++count;
            if (out) out->push_back(st);
            return;
        }
        const WalkStep& s = steps[idx];
        if (s.kind == WalkStep::CapArc || s.kind == WalkStep::CupArc) {
            if (label <= B) dfs(idx + 1, label);
            return;
        }
        int& i = st[s.crossing];
        const bool gains = s.kind == WalkStep::CrossingF;
        if (i >= 0) {
            if (gains && label + i <= cap) dfs(idx + 1, label + i);
            if (!gains && label >= i) dfs(idx + 1, label - i);
            return;
        }
        const int hi = gains ? cap - label : label;
        for (int v = 0; v <= hi; ++v) {
            i = v;
            dfs(idx + 1, gains ? label + v : label - v);
        }
        i = -1;
    };
    dfs(0, 0);
    return count;
}

TruncatedSeries f_infinity_statesum(const TangleDiagram& D, int B) {
    std::vector<StateAssignment> states;
    enumerate_states(D, B, &states);
    TruncatedSeries out;
    for (const auto& s : states) out.value += evaluate_state(D, s);
    out.state_bound = B;
    out.writhe = D.writhe();
    const auto prof = D.profile();
    out.strands = (*std::max_element(prof.begin(), prof.end()) + 1) / 2;
    return out;
}

}  // namespace finf

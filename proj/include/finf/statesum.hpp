#pragma once

#include "finf/traces.hpp"

#include <string>
#include <vector>

namespace finf {

enum class EventKind { Crossing, Cap, Cup };

// One Morse event; pos is 1-based. Crossings act on pos, pos+1; a cap joins pos, pos+1;
// a cup creates new strands at pos, pos+1. `rightward` is the traversal direction
// through a cap or cup ('r').
struct Event {
    EventKind kind;
    int pos;
    int sign = 1;
    bool rightward = false;
};

class DiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// (1,1)-tangle read bottom to top, starting from a single strand.
struct TangleDiagram {
    std::vector<Event> events;

    // Strand count below event t (t == events.size() gives the top).
    std::vector<int> profile() const;
    int crossing_count() const;
    int writhe() const;
    std::string str() const;
};

TangleDiagram parse_diagram(const std::string& text);
TangleDiagram braid_closure_diagram(const BraidWord& beta);

// One step of the walk along the knot from bottom to top.
struct WalkStep {
    enum Kind { CrossingF, CrossingE, CapArc, CupArc } kind;
    int crossing = -1;  // crossing ordinal, for crossing steps
    int event = -1;     // event index
    bool counted = false;  // arc carries a pivot factor
};
// Throws DiagramError for inconsistent diagrams or unsupported orientations.
std::vector<WalkStep> walk(const TangleDiagram& D);

using StateAssignment = std::vector<int>;

// Weight of a state without the quadratic prefactor; throws DiagramError if the labels go negative.
BivariateLaurent evaluate_state(const TangleDiagram& D, const StateAssignment& state);

// Sum over states whose closure-arc labels are all <= B.
TruncatedSeries f_infinity_statesum(const TangleDiagram& D, int B);
// Number of consistent states with closure labels <= B; appends them to `out` when given.
size_t enumerate_states(const TangleDiagram& D, int B, std::vector<StateAssignment>* out);

}  // namespace finf

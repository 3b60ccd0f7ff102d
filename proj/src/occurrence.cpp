#include "ccount/occurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ccount {

namespace {

void walk(const CatType& t, Polarity pol, Direction dir, std::size_t token, std::size_t& rank,
          std::vector<Occurrence>& out) {
    if (t.is_basic()) {
        out.push_back({t.atom(), pol, dir, {token, rank++}});
        return;
    }
    walk(t.result(), pol, dir, token, rank, out);
    Polarity flipped = pol == Polarity::Head ? Polarity::Argument : Polarity::Head;
    Direction arg_dir = dir;
    if (arg_dir == Direction::None) {
        arg_dir = t.slash() == Slash::Rightward ? Direction::Rightward : Direction::Leftward;
    }
    walk(t.argument(), flipped, arg_dir, token, rank, out);
}

bool may_saturate(const Occurrence& arg, const Occurrence& head) {
    if (arg.position.token == head.position.token) return false;
    return arg.direction == Direction::Rightward ? head.position > arg.position
                                                 : head.position < arg.position;
}

// Augmenting-path bipartite matching of one basic type's arguments to its
// heads.  Arguments are offered in the order given; an augmenting path never
// unmatches an argument, so earlier arguments get priority.
class TypeMatcher {
public:
    TypeMatcher(const std::vector<const Occurrence*>& args, const std::vector<const Occurrence*>& heads)
        : args_(args), heads_(heads), arg_match_(args.size(), -1), head_match_(heads.size(), -1),
          seen_(heads.size(), 0) {}

    void offer(std::size_t a) {
        ++stamp_;
        augment(a);
    }

    bool matched(std::size_t a) const { return arg_match_[a] >= 0; }
    bool head_matched(std::size_t h) const { return head_match_[h] >= 0; }

private:
    bool augment(std::size_t a) {
        for (std::size_t h = 0; h < heads_.size(); ++h) {
            if (seen_[h] == stamp_ || !may_saturate(*args_[a], *heads_[h])) continue;
            seen_[h] = stamp_;
            if (head_match_[h] < 0 || augment(static_cast<std::size_t>(head_match_[h]))) {
                head_match_[h] = static_cast<int>(a);
                arg_match_[a] = static_cast<int>(h);
                return true;
            }
        }
        return false;
    }

    const std::vector<const Occurrence*>& args_;
    const std::vector<const Occurrence*>& heads_;
    std::vector<int> arg_match_;
    std::vector<int> head_match_;
    std::vector<int> seen_;
    int stamp_ = 0;
};

}  // namespace

std::vector<Occurrence> occurrences(const CatType& t) {
    std::vector<Occurrence> out;
    std::size_t rank = 0;
    walk(t, Polarity::Head, Direction::None, 0, rank, out);
    return out;
}

std::vector<Occurrence> seq_occurrences(const TypeSequence& s) {
    std::vector<Occurrence> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t rank = 0;
        walk(s[i], Polarity::Head, Direction::None, i, rank, out);
    }
    return out;
}

Register::Register(Side side, std::vector<Entry> entries) : side_(side), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
}

Quadruple Register::quad(const BasicType& x) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Entry& e, const BasicType& k) { return e.first < k; });
    if (it != entries_.end() && it->first == x) return it->second;
    return {};
}

Saturation saturate(const TypeSequence& s, Side side) {
    const auto occs = seq_occurrences(s);
    // Arguments pointing away from the coordinator must be saturated inside
    // the conjunct; their matches make up sathead.
    const Direction inward = side == Side::LeftConjunct ? Direction::Leftward : Direction::Rightward;

    struct Group {
        std::vector<const Occurrence*> heads;
        std::vector<const Occurrence*> inward_args;
        std::vector<const Occurrence*> outward_args;
    };
    std::map<BasicType, Group> groups;
    for (const auto& o : occs) {
        Group& g = groups[o.basic];
        if (o.polarity == Polarity::Head) {
            g.heads.push_back(&o);
        } else if (o.direction == inward) {
            g.inward_args.push_back(&o);
        } else {
            g.outward_args.push_back(&o);
        }
    }

    std::vector<Register::Entry> entries;
    entries.reserve(groups.size());
    std::optional<Occurrence> first_free;
    for (const auto& [basic, g] : groups) {
        std::vector<const Occurrence*> args = g.inward_args;
        args.insert(args.end(), g.outward_args.begin(), g.outward_args.end());
        TypeMatcher m(args, g.heads);
        for (std::size_t a = 0; a < args.size(); ++a) m.offer(a);

        Quadruple q;
        for (std::size_t a = 0; a < g.inward_args.size(); ++a) {
            if (m.matched(a)) {
                ++q.sathead;
            } else if (!first_free || args[a]->position < first_free->position) {
                first_free = *args[a];
            }
        }
        for (std::size_t a = g.inward_args.size(); a < args.size(); ++a) {
            if (m.matched(a)) {
                ++q.satarg;
            } else {
                ++q.freearg;
            }
        }
        for (std::size_t h = 0; h < g.heads.size(); ++h) {
            if (!m.head_matched(h)) ++q.freehead;
        }
        entries.emplace_back(basic, q);
    }

    Saturation out{Register(side, std::move(entries)), SideVerdict::pass()};
    if (first_free) {
        out.verdict = SideVerdict::fail(side == Side::LeftConjunct ? FailureReason::FreeLeftwardArgInLeft
                                                                   : FailureReason::FreeRightwardArgInRight,
                                        *first_free);
    }
    return out;
}

std::string render_register(const Register& reg) {
    std::ostringstream out;
    for (const auto& [x, q] : reg.entries()) {
        out << x.name() << ": <" << q.sathead << ',' << q.satarg << ',' << q.freehead << ',' << q.freearg
            << ">\n";
    }
    return out.str();
}

std::string render_verdict(const SideVerdict& v) {
    if (v.ok) return "Ok";
    std::ostringstream out;
    out << "Fail " << to_string(*v.reason) << ": " << v.offending->basic.name() << " at token "
        << v.offending->position.token;
    return out.str();
}

std::string to_string(Side side) { return side == Side::LeftConjunct ? "left" : "right"; }

std::string to_string(FailureReason r) {
    return r == FailureReason::FreeLeftwardArgInLeft ? "FreeLeftwardArgInLeft" : "FreeRightwardArgInRight";
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::None: return "none";
        case Direction::Leftward: return "leftward";
        case Direction::Rightward: return "rightward";
    }
    return "?";
}

TypeSequence mirror(const TypeSequence& s) {
    TypeSequence out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(flip_slashes(*it));
    return out;
}

}  // namespace ccount

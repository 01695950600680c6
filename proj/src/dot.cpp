#include "negcirc/dot.hpp"

#include <sstream>

namespace negcirc {

std::string export_dot(const TransitionGraph& g)
{
    std::ostringstream os;
    os << "digraph " << to_string(g.flavor()) << "_stg {\n";
    os << "  node [shape=box];\n";
    const StateSpace& space = g.space();
    for (Rank x = 0; x < g.vertex_count(); ++x)
        os << "  s" << x << " [label=\"" << to_string(space.unrank(x)) << "\"];\n";
    for (Rank x = 0; x < g.vertex_count(); ++x)
        for (Rank y : g.successors(x))
            os << "  s" << x << " -> s" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const SignedDigraph& g)
{
    std::ostringstream os;
    os << "digraph interaction {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
    for (const Arc& a : g.arcs()) {
        os << "  v" << a.from + 1 << " -> v" << a.to + 1;
        if (a.sign > 0)
            os << " [label=\"+\"];\n";
        else
            os << " [label=\"-\", style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace negcirc

#pragma once

#include "wiretap/graph.hpp"

namespace wiretap::fixtures {

// Named graphs used throughout the suite. Edge ids are fixed by
// construction order and tests rely on them.

Graph k3();
Graph k4();
Graph k5();
Graph p3();                 // path a-b-c: two bridges
Graph two_parallel();       // two vertices, two parallel edges
Graph bowtie();             // triangles {0,1,2} and {3,4,5} sharing vertex 2
Graph triangle_pendant();   // triangle 0,1,2 plus pendant edge 2-3 (id 3)

// The 13-vertex, 26-edge running example: two K4s tied to each other by two
// edges and to a K5 by one edge each. Ids: 0,1 the K4-K5 links; 2,3 the
// K4-K4 links; 4..9 left K4; 10..15 right K4; 16..25 the K5.
Graph fig1();

}  // namespace wiretap::fixtures

"""Combinatorial sources of quivers and seeds: triangulations, wiring
diagrams, double wiring diagrams, disk bipartite graphs, and projective
configurations including the pentagram map."""

"""Conjecture verdicts observed when the release was cut (regression values).

Key: (class, lambda, nu, n). Value: (kappa dominated by the forest kappa,
E[frag] at most the forest E[frag]).
"""

FROZEN = {
    ('all_graphs', '1', '1', 1): (True, True),
    ('all_graphs', '1', '1', 2): (True, True),
    ('all_graphs', '1', '1', 3): (True, True),
    ('all_graphs', '1', '1', 4): (True, True),
    ('all_graphs', '1', '1', 5): (True, True),
    ('all_graphs', '1', '1', 6): (True, True),
    ('all_graphs', '1', '2', 1): (True, True),
    ('all_graphs', '1', '2', 2): (True, True),
    ('all_graphs', '1', '2', 3): (True, True),
    ('all_graphs', '1', '2', 4): (True, True),
    ('all_graphs', '1', '2', 5): (True, True),
    ('all_graphs', '1', '2', 6): (True, True),
    ('all_graphs', '1/2', '3', 1): (True, True),
    ('all_graphs', '1/2', '3', 2): (True, True),
    ('all_graphs', '1/2', '3', 3): (True, True),
    ('all_graphs', '1/2', '3', 4): (True, True),
    ('all_graphs', '1/2', '3', 5): (True, True),
    ('all_graphs', '1/2', '3', 6): (True, True),
    ('all_graphs', '2', '1', 1): (True, True),
    ('all_graphs', '2', '1', 2): (True, True),
    ('all_graphs', '2', '1', 3): (True, True),
    ('all_graphs', '2', '1', 4): (True, True),
    ('all_graphs', '2', '1', 5): (True, True),
    ('all_graphs', '2', '1', 6): (True, True),
    ('block_clique', '1', '1', 1): (True, True),
    ('block_clique', '1', '1', 2): (True, True),
    ('block_clique', '1', '1', 3): (True, True),
    ('block_clique', '1', '1', 4): (True, True),
    ('block_clique', '1', '1', 5): (True, True),
    ('block_clique', '1', '1', 6): (True, True),
    ('block_clique', '1', '2', 1): (True, True),
    ('block_clique', '1', '2', 2): (True, True),
    ('block_clique', '1', '2', 3): (True, True),
    ('block_clique', '1', '2', 4): (True, True),
    ('block_clique', '1', '2', 5): (True, True),
    ('block_clique', '1', '2', 6): (True, True),
    ('block_clique', '1/2', '3', 1): (True, True),
    ('block_clique', '1/2', '3', 2): (True, True),
    ('block_clique', '1/2', '3', 3): (True, True),
    ('block_clique', '1/2', '3', 4): (True, True),
    ('block_clique', '1/2', '3', 5): (True, True),
    ('block_clique', '1/2', '3', 6): (True, True),
    ('block_clique', '2', '1', 1): (True, True),
    ('block_clique', '2', '1', 2): (True, True),
    ('block_clique', '2', '1', 3): (True, True),
    ('block_clique', '2', '1', 4): (True, True),
    ('block_clique', '2', '1', 5): (True, True),
    ('block_clique', '2', '1', 6): (True, True),
    ('forests', '1', '1', 1): (True, True),
    ('forests', '1', '1', 2): (True, True),
    ('forests', '1', '1', 3): (True, True),
    ('forests', '1', '1', 4): (True, True),
    ('forests', '1', '1', 5): (True, True),
    ('forests', '1', '1', 6): (True, True),
    ('forests', '1', '2', 1): (True, True),
    ('forests', '1', '2', 2): (True, True),
    ('forests', '1', '2', 3): (True, True),
    ('forests', '1', '2', 4): (True, True),
    ('forests', '1', '2', 5): (True, True),
    ('forests', '1', '2', 6): (True, True),
    ('forests', '1/2', '3', 1): (True, True),
    ('forests', '1/2', '3', 2): (True, True),
    ('forests', '1/2', '3', 3): (True, True),
    ('forests', '1/2', '3', 4): (True, True),
    ('forests', '1/2', '3', 5): (True, True),
    ('forests', '1/2', '3', 6): (True, True),
    ('forests', '2', '1', 1): (True, True),
    ('forests', '2', '1', 2): (True, True),
    ('forests', '2', '1', 3): (True, True),
    ('forests', '2', '1', 4): (True, True),
    ('forests', '2', '1', 5): (True, True),
    ('forests', '2', '1', 6): (True, True),
    ('planar_small', '1', '1', 1): (True, True),
    ('planar_small', '1', '1', 2): (True, True),
    ('planar_small', '1', '1', 3): (True, True),
    ('planar_small', '1', '1', 4): (True, True),
    ('planar_small', '1', '1', 5): (True, True),
    ('planar_small', '1', '1', 6): (True, True),
    ('planar_small', '1', '2', 1): (True, True),
    ('planar_small', '1', '2', 2): (True, True),
    ('planar_small', '1', '2', 3): (True, True),
    ('planar_small', '1', '2', 4): (True, True),
    ('planar_small', '1', '2', 5): (True, True),
    ('planar_small', '1', '2', 6): (True, True),
    ('planar_small', '1/2', '3', 1): (True, True),
    ('planar_small', '1/2', '3', 2): (True, True),
    ('planar_small', '1/2', '3', 3): (True, True),
    ('planar_small', '1/2', '3', 4): (True, True),
    ('planar_small', '1/2', '3', 5): (True, True),
    ('planar_small', '1/2', '3', 6): (True, True),
    ('planar_small', '2', '1', 1): (True, True),
    ('planar_small', '2', '1', 2): (True, True),
    ('planar_small', '2', '1', 3): (True, True),
    ('planar_small', '2', '1', 4): (True, True),
    ('planar_small', '2', '1', 5): (True, True),
    ('planar_small', '2', '1', 6): (True, True),
    ('pseudoforests', '1', '1', 1): (True, True),
    ('pseudoforests', '1', '1', 2): (True, True),
    ('pseudoforests', '1', '1', 3): (True, True),
    ('pseudoforests', '1', '1', 4): (True, True),
    ('pseudoforests', '1', '1', 5): (True, True),
    ('pseudoforests', '1', '1', 6): (True, True),
    ('pseudoforests', '1', '2', 1): (True, True),
    ('pseudoforests', '1', '2', 2): (True, True),
    ('pseudoforests', '1', '2', 3): (True, True),
    ('pseudoforests', '1', '2', 4): (True, True),
    ('pseudoforests', '1', '2', 5): (True, True),
    ('pseudoforests', '1', '2', 6): (True, True),
    ('pseudoforests', '1/2', '3', 1): (True, True),
    ('pseudoforests', '1/2', '3', 2): (True, True),
    ('pseudoforests', '1/2', '3', 3): (True, True),
    ('pseudoforests', '1/2', '3', 4): (True, True),
    ('pseudoforests', '1/2', '3', 5): (True, True),
    ('pseudoforests', '1/2', '3', 6): (True, True),
    ('pseudoforests', '2', '1', 1): (True, True),
    ('pseudoforests', '2', '1', 2): (True, True),
    ('pseudoforests', '2', '1', 3): (True, True),
    ('pseudoforests', '2', '1', 4): (True, True),
    ('pseudoforests', '2', '1', 5): (True, True),
    ('pseudoforests', '2', '1', 6): (True, True),
}

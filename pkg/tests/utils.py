from hypothesis import strategies as st

import paritygames as pg


def random_games(count, n, d, priority_count=2, seed=0):
    """
    ``count`` games of the random model, seeds ``seed .. seed + count - 1``.
    """
    return pg.generate_many(
        pg.GenConfig.create(n, d, priority_count=priority_count, seed=seed), count
    )


def assertSameWinners(test_obj, game, expected, actual):
    test_obj.maxDiff = None
    test_obj.assertEqual(
        [str(w) for w in expected.winner],
        [str(w) for w in actual.winner],
        f"winner mismatch on\n{pg.render_pgsolver(game)}",
    )


def game_from_labels(table):
    """
    Build a game from ``{label: (owner code, priority, [successor labels])}``
    with labels ``1 .. n``, stored as ids ``0 .. n - 1``.
    """
    labels = sorted(table)
    return pg.ParityGame.create(
        [[w - 1 for w in table[k][2]] for k in labels],
        [table[k][0] for k in labels],
        [table[k][1] for k in labels],
    )


@st.composite
def games(draw, max_nodes=6, max_priority=4, max_degree=3):
    """
    Arbitrary valid games: any owners, priorities and nonempty successor sets,
    self-loops included.
    """
    n = draw(st.integers(1, max_nodes))
    successors = [
        sorted(
            draw(
                st.sets(
                    st.integers(0, n - 1), min_size=1, max_size=min(n, max_degree)
                )
            )
        )
        for _ in range(n)
    ]
    owner = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    priority = draw(st.lists(st.integers(0, max_priority), min_size=n, max_size=n))
    return pg.ParityGame.create(successors, owner, priority)

caps = dict(
    con_limit=10000,
    clone_limit=200000,
    reflexive_limit=64,
)

corpus = dict(
    type='AlgebraCorpus',
    count=500,
    max_size=6,
    max_ops=2,
    seed=0,
    pinned=True,
)

solver = dict(
    type='SuiteSolver',
    hooks=dict(
        log=dict(type='LogHook', log_interval=50),
    )
)

output = dict(
    format='json',
)
"""
A standard config file should include
* caps: search limits, exceeding one aborts with exit code 3
    - con_limit: int, most congruences enumerated per algebra, REFINERY_CON_LIMIT overrides it
    - clone_limit: int, most ternary term operations built in a term search
    - reflexive_limit: int, most compatible reflexive relations enumerated
* corpus: shows how to build the suite corpus
    - type: str, 'AlgebraCorpus'
    - count: int, random algebras after the pinned set
    - max_size: int, >= 2
    - max_ops: int, >= 1
    - seed: int
    - pinned: bool
* solver: shows how to run the suite
    - type: 'SuiteSolver'
    - hooks: Dict[dict], List[dict], optional
* output:
    - format: 'json', 'text' or 'dot'
"""

from .seeding import derived_rng, derived_seed_sequence

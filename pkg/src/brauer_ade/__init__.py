"""Brauer algebras of simply-laced type: roots, admissible sets, Morita blocks."""

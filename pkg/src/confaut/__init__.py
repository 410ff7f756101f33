"""Configuration spaces of the complex line: discriminants, automorphisms, derivations."""

from .crossed_triple import CrossedTriple, TagLayout, build_crossed, check_associativity

__all__ = ["CrossedTriple", "TagLayout", "build_crossed", "check_associativity"]

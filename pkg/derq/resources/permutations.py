from ..permgroup import PermGroup, parse_permutation, sylow2_sym


class Permutations:
    def __init__(self, workbench):
        self.workbench = workbench

    def sylow2(self, m):
        """Sylow 2-subgroup of Sym(m) as a permutation engine."""
        return PermGroup(sylow2_sym(m))

    def group(self, perms, degree=None):
        """Engine for the group generated by permutations in cycle or image-list notation."""
        gens = [parse_permutation(p, degree) if isinstance(p, str) else p for p in perms]
        return PermGroup(gens, degree)

"""Concrete finite groups as dense multiplication tables.

A group is stored as an n-by-n table of element indices with the identity
fixed at index 0.  All downstream structures (subgroups, lattices, chief
series) are bitmasks over 0..n-1, so everything here is exact integer
arithmetic; numpy is used only to vectorise table lookups.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ClosureCapExceeded,
    InvalidPermutation,
    IsoCapExceeded,
    NotActionHomomorphism,
    NotAutomorphism,
    NotNormal,
    RelationMismatch,
)

ORDER_CAP = 512
ISO_CAP = 128


def bits_of(elems: Iterable[int]) -> int:
    bits = 0
    for e in elems:
        bits |= 1 << int(e)
    return bits


def elems_of(bits: int) -> np.ndarray:
    out = []
    e = 0
    while bits:
        if bits & 1:
            out.append(e)
        bits >>= 1
        e += 1
    return np.array(out, dtype=np.intp)


class Group:
    """Finite group on indices 0..n-1 with a dense multiplication table.

    Immutable after construction; the identity is always index 0.
    """

    def __init__(self, mul, name: str, gen_idx: Sequence[int] | None = None,
                 provenance: str = "table"):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.intp))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise ValueError("multiplication table must be square")
        n = mul.shape[0]
        if n > ORDER_CAP:
            raise ClosureCapExceeded(f"group order {n} exceeds cap {ORDER_CAP}")
        self.n = n
        self.mul = mul
        self.name = name
        self.e = 0
        self.provenance = provenance
        self._validate_table()
        self.inv = self._invert_table()
        if gen_idx is None:
            gen_idx = self._find_generators()
        self.gen_idx = tuple(int(g) for g in gen_idx)
        self._cache: dict = {}
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    # -- construction checks ------------------------------------------------

    def _validate_table(self) -> None:
        n, mul = self.n, self.mul
        ar = np.arange(n)
        if mul.min() < 0 or mul.max() >= n:
            raise ValueError("table entries out of range")
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise ValueError("index 0 is not a two-sided identity")
        if not (np.array_equal(np.sort(mul, axis=1), np.tile(ar, (n, 1)))
                and np.array_equal(np.sort(mul, axis=0), np.tile(ar[:, None], (1, n)))):
            raise ValueError("table rows/columns are not permutations")
        # full associativity check; the order cap keeps this affordable
        for x in range(n):
            if not np.array_equal(mul[mul[x]], mul[x][mul]):
                raise ValueError(f"associativity fails at element {x}")

    def _invert_table(self) -> np.ndarray:
        inv = np.argmin(self.mul, axis=1)  # position of 0 in each row
        if not np.all(self.mul[np.arange(self.n), inv] == 0):
            raise ValueError("no inverses")
        return inv.astype(np.intp)

    def _find_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        have = np.array([0], dtype=np.intp)
        for x in range(1, self.n):
            if have.size == self.n:
                break
            if x in have:
                continue
            gens.append(x)
            have = closure_elements(self, np.append(have, x))
        return tuple(gens)

    # -- element arithmetic -------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def op(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def conjugate(self, g: int, x: int) -> int:
        return int(self.mul[self.mul[g, x], self.inv[g]])

    # -- subgroup handles ---------------------------------------------------

    def subgroup(self, elems: Iterable[int]) -> "SubgroupSet":
        return SubgroupSet(self, bits_of(elems))

    def trivial_subgroup(self) -> "SubgroupSet":
        return SubgroupSet(self, 1, check=False)

    def full_subgroup(self) -> "SubgroupSet":
        return SubgroupSet(self, (1 << self.n) - 1, check=False)

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.n})"

    __hash__ = object.__hash__

    def __eq__(self, other) -> bool:
        return self is other


class SubgroupSet:
    """A subgroup of a fixed parent group, stored as an element bitmask."""

    __slots__ = ("parent", "bits", "_elems")

    def __init__(self, parent: Group, bits: int, check: bool = True):
        self.parent = parent
        self.bits = bits
        self._elems: np.ndarray | None = None
        if check:
            self._verify()

    def _verify(self) -> None:
        if not self.bits & 1:
            raise ValueError("subgroup must contain the identity")
        el = self.elements
        if self.parent.n % el.size != 0:
            raise ValueError("subgroup order violates Lagrange")
        prods = self.parent.mul[np.ix_(el, el)]
        mask = np.zeros(self.parent.n, dtype=bool)
        mask[el] = True
        if not mask[prods].all():
            raise ValueError("element set is not closed under multiplication")

    @property
    def elements(self) -> np.ndarray:
        if self._elems is None:
            self._elems = elems_of(self.bits)
        return self._elems

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    def contains(self, x: int) -> bool:
        return bool((self.bits >> x) & 1)

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.bits & other.bits == self.bits

    def is_proper(self) -> bool:
        return self.order < self.parent.n

    def __and__(self, other: "SubgroupSet") -> "SubgroupSet":
        if other.parent is not self.parent:
            raise ValueError("subgroups of different parents")
        return SubgroupSet(self.parent, self.bits & other.bits, check=False)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "SubgroupSet") -> bool:
        return self.bits != other.bits and self.issubset(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubgroupSet) and other.parent is self.parent
                and other.bits == self.bits)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.bits))

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order} of {self.parent.name})"


class QuotientMap:
    """Projection of a group onto its quotient by a normal subgroup."""

    def __init__(self, source: Group, target: Group, proj: np.ndarray,
                 kernel: SubgroupSet):
        self.source = source
        self.target = target
        self.proj = proj
        self.kernel = kernel

    def image_of(self, sub: SubgroupSet) -> SubgroupSet:
        return SubgroupSet(self.target, bits_of(np.unique(self.proj[sub.elements])),
                           check=False)

    def preimage_of(self, sub: SubgroupSet) -> SubgroupSet:
        mask = np.zeros(self.target.n, dtype=bool)
        mask[sub.elements] = True
        return SubgroupSet(self.source, bits_of(np.nonzero(mask[self.proj])[0]),
                           check=False)


# -- closure machinery ------------------------------------------------------

def closure_elements(G: Group, seed: Iterable[int]) -> np.ndarray:
    """Subgroup generated by `seed`, as a sorted element array.

    Frontier-based: each round only multiplies new elements against the
    current set.  If the set ever exceeds half the group order it must be
    the whole group (Lagrange), which short-circuits large joins.
    """
    n, mul = G.n, G.mul
    elems = np.unique(np.append(np.asarray(list(seed), dtype=np.intp), 0))
    mask = np.zeros(n, dtype=bool)
    mask[elems] = True
    new = elems
    while new.size:
        prods = np.unique(np.concatenate(
            [mul[np.ix_(new, elems)].ravel(), mul[np.ix_(elems, new)].ravel()]))
        fresh = prods[~mask[prods]]
        if fresh.size == 0:
            break
        mask[fresh] = True
        elems = np.flatnonzero(mask)
        if elems.size > n // 2:
            return np.arange(n)
        new = fresh
    return elems


def generated_subgroup(G: Group, seed: Iterable[int]) -> SubgroupSet:
    return SubgroupSet(G, bits_of(closure_elements(G, seed)), check=False)


def conjugacy_classes(G: Group) -> list[np.ndarray]:
    """Conjugacy classes of G, ordered by least element."""
    if "conj_classes" not in G._cache:
        seen = np.zeros(G.n, dtype=bool)
        classes = []
        for x in range(G.n):
            if seen[x]:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in G.gen_idx:
                    z = G.conjugate(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            cls = np.array(sorted(orbit), dtype=np.intp)
            seen[cls] = True
            classes.append(cls)
        G._cache["conj_classes"] = classes
    return G._cache["conj_classes"]


def class_of(G: Group, x: int) -> np.ndarray:
    if "class_map" not in G._cache:
        cm = np.zeros(G.n, dtype=np.intp)
        for i, cls in enumerate(conjugacy_classes(G)):
            cm[cls] = i
        G._cache["class_map"] = cm
    return conjugacy_classes(G)[G._cache["class_map"][x]]


def normal_closure_elements(G: Group, seed: Iterable[int]) -> np.ndarray:
    """Smallest normal subgroup of G containing `seed`."""
    full = []
    for x in np.asarray(list(seed), dtype=np.intp):
        full.append(class_of(G, int(x)))
    return closure_elements(G, np.concatenate(full) if full else [0])


def element_orders(G: Group) -> np.ndarray:
    if "elem_orders" not in G._cache:
        orders = np.zeros(G.n, dtype=np.intp)
        for x in range(G.n):
            k, y = 1, x
            while y != 0:
                y = G.op(y, x)
                k += 1
            orders[x] = k
        G._cache["elem_orders"] = orders
    return G._cache["elem_orders"]


def element_order(G: Group, x: int) -> int:
    """Least k >= 1 with x^k = e."""
    if not 0 <= x < G.n:
        raise ValueError(f"element index {x} out of range")
    return int(element_orders(G)[x])


# -- constructors -----------------------------------------------------------

def _perm_from_cycles_ok(perm: Sequence[int], degree: int) -> tuple[int, ...]:
    p = tuple(int(v) for v in perm)
    if len(p) != degree or sorted(p) != list(range(1, degree + 1)):
        raise InvalidPermutation(f"not a permutation of 1..{degree}: {perm}")
    return p


def group_from_permutations(degree: int, generators: Sequence[Sequence[int]],
                            name: str = "perm-group",
                            cap: int = ORDER_CAP) -> Group:
    """Group generated by permutations of {1..degree}, as images tuples.

    Elements are indexed in BFS order from the identity, so the numbering
    is deterministic for a fixed generator list.
    """
    if degree < 1:
        raise InvalidPermutation("degree must be positive")
    gens = [_perm_from_cycles_ok(g, degree) for g in generators]
    ident = tuple(range(1, degree + 1))
    index = {ident: 0}
    elems = [ident]
    queue = [ident]
    while queue:
        cur = queue.pop(0)
        for g in gens:
            # right-multiply: (cur * g)(i) = cur[g(i)]
            nxt = tuple(cur[g[i] - 1] for i in range(degree))
            if nxt not in index:
                if len(elems) >= cap:
                    raise ClosureCapExceeded(
                        f"closure exceeds cap {cap} (degree {degree})")
                index[nxt] = len(elems)
                elems.append(nxt)
                queue.append(nxt)
    n = len(elems)
    mul = np.empty((n, n), dtype=np.intp)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            mul[i, j] = index[tuple(a[b[k] - 1] for k in range(degree))]
    gen_idx = [index[g] for g in gens]
    return Group(mul, name, gen_idx=gen_idx, provenance=f"permutations deg {degree}")


def direct_product(A: Group, B: Group, name: str | None = None,
                   cap: int = ORDER_CAP) -> Group:
    """Componentwise product; element (a, b) has index a*|B| + b."""
    n = A.n * B.n
    if n > cap:
        raise ClosureCapExceeded(f"direct product order {n} exceeds cap {cap}")
    mul = (A.mul[:, None, :, None] * B.n + B.mul[None, :, None, :]).reshape(n, n)
    gens = [g * B.n for g in A.gen_idx] + list(B.gen_idx)
    return Group(mul, name or f"{A.name} x {B.name}", gen_idx=gens,
                 provenance=f"direct product of {A.name}, {B.name}")


def semidirect_product(N: Group, H: Group, action, name: str | None = None,
                       cap: int = ORDER_CAP) -> Group:
    """N ⋊ H for a left action of H on N by automorphisms.

    `action[h]` is the permutation of N's indices giving the automorphism
    induced by h; multiplication is (n1,h1)(n2,h2) = (n1 · h1▷n2, h1h2).
    """
    action = np.asarray(action, dtype=np.intp)
    if action.shape != (H.n, N.n):
        raise NotActionHomomorphism(
            f"action table must be {H.n} x {N.n}, got {action.shape}")
    ar = np.arange(N.n)
    for h in range(H.n):
        a = action[h]
        if not np.array_equal(np.sort(a), ar) or a[0] != 0:
            raise NotAutomorphism(f"action of element {h} is not a bijection fixing e")
        if not np.array_equal(a[N.mul], N.mul[np.ix_(a, a)]):
            raise NotAutomorphism(f"action of element {h} is not an automorphism")
    if not np.array_equal(action[0], ar):
        raise NotActionHomomorphism("identity must act trivially")
    for h1 in range(H.n):
        # action(h1 h2) must equal action(h1) ∘ action(h2)
        if not np.array_equal(action[H.mul[h1]], action[h1][action]):
            raise NotActionHomomorphism(f"action is not multiplicative at {h1}")
    n = N.n * H.n
    if n > cap:
        raise ClosureCapExceeded(f"semidirect product order {n} exceeds cap {cap}")
    mul = np.empty((n, n), dtype=np.intp)
    for h1 in range(H.n):
        # block of rows with second coordinate h1
        acted = action[h1]  # h1 ▷ n2
        prod_n = N.mul[:, acted]          # [n1, n2] -> n1 · (h1▷n2)
        prod_h = H.mul[h1]                # [h2] -> h1 h2
        block = prod_n[:, :, None] * H.n + prod_h[None, None, :]
        rows = np.arange(N.n) * H.n + h1
        mul[rows] = block.reshape(N.n, n)
    gens = [nx * H.n for nx in N.gen_idx] + list(H.gen_idx)
    return Group(mul, name or f"{N.name} : {H.name}", gen_idx=gens,
                 provenance=f"semidirect product of {N.name} by {H.name}")


def trivial_action(N: Group, H: Group) -> np.ndarray:
    return np.tile(np.arange(N.n), (H.n, 1))


def elementary_abelian_vector_group(p: int, dim: int,
                                    name: str | None = None) -> Group:
    """(C_p)^dim with vectors indexed by base-p digit strings."""
    n = p ** dim
    idx = np.arange(n)
    digits = np.empty((n, dim), dtype=np.intp)
    t = idx.copy()
    for d in range(dim):
        digits[:, d] = t % p
        t //= p
    weights = p ** np.arange(dim)
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    mul = sums @ weights
    return Group(mul, name or f"E{n}", provenance=f"elementary abelian {p}^{dim}")


def _vector_index_perm(p: int, dim: int, mat: np.ndarray) -> np.ndarray:
    """Permutation of F_p^dim indices induced by an invertible matrix."""
    n = p ** dim
    idx = np.arange(n)
    digits = np.empty((dim, n), dtype=np.intp)
    t = idx.copy()
    for d in range(dim):
        digits[d] = t % p
        t //= p
    out = (mat % p) @ digits % p
    weights = p ** np.arange(dim)
    return weights @ out


def matrix_module_semidirect(p: int, dim: int, mats: Sequence, H: Group,
                             name: str | None = None,
                             cap: int = ORDER_CAP) -> tuple[Group, SubgroupSet]:
    """V ⋊ H for V = F_p^dim acted on by matrices given on H's generators.

    Returns the product group together with the designated copy of V.
    The generator matrices are extended along H's Cayley graph and the
    extension is checked against H's full multiplication table.
    """
    mats = [np.asarray(m, dtype=np.intp) % p for m in mats]
    if len(mats) != len(H.gen_idx):
        raise RelationMismatch(
            f"need one matrix per generator of {H.name} "
            f"({len(H.gen_idx)}), got {len(mats)}")
    n = p ** dim * H.n
    if n > cap:
        raise ClosureCapExceeded(f"matrix module extension order {n} exceeds cap {cap}")
    ident = np.eye(dim, dtype=np.intp)
    elem_mats: dict[int, np.ndarray] = {0: ident}
    queue = [0]
    while queue:
        h = queue.pop(0)
        for g, mg in zip(H.gen_idx, mats):
            nxt = int(H.mul[h, g])
            m = elem_mats[h] @ mg % p
            if nxt in elem_mats:
                if not np.array_equal(elem_mats[nxt], m):
                    raise RelationMismatch(
                        "generator matrices do not respect the group relations")
            else:
                elem_mats[nxt] = m
                queue.append(nxt)
    if len(elem_mats) != H.n:
        raise RelationMismatch("generators do not reach the whole group")
    for h1 in range(H.n):
        for h2 in H.gen_idx:
            if not np.array_equal(
                    elem_mats[H.mul[h1, h2]],
                    elem_mats[h1] @ elem_mats[h2] % p):
                raise RelationMismatch("matrix extension is not a homomorphism")
    V = elementary_abelian_vector_group(p, dim)
    action = np.stack([_vector_index_perm(p, dim, elem_mats[h]) for h in range(H.n)])
    G = semidirect_product(V, H, action, name=name or f"F{p}^{dim} : {H.name}",
                           cap=cap)
    vsub = SubgroupSet(G, bits_of(np.arange(V.n) * H.n), check=False)
    return G, vsub


def quotient_group(G: Group, N: SubgroupSet) -> QuotientMap:
    """Quotient G/N; cosets are indexed by their least element, ascending."""
    if N.parent is not G:
        raise ValueError("subgroup of a different parent")
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.name}")
    nel = N.elements
    proj = np.full(G.n, -1, dtype=np.intp)
    reps = []
    for x in range(G.n):
        if proj[x] >= 0:
            continue
        coset = np.unique(G.mul[x, nel])
        proj[coset] = len(reps)
        reps.append(x)
    reps_arr = np.array(reps, dtype=np.intp)
    q = len(reps)
    mul = proj[G.mul[np.ix_(reps_arr, reps_arr)]]
    gens = []
    for g in G.gen_idx:
        pg = int(proj[g])
        if pg != 0 and pg not in gens:
            gens.append(pg)
    target = Group(mul, f"{G.name}/({N.order})", gen_idx=gens,
                   provenance=f"quotient of {G.name} by order-{N.order} subgroup")
    return QuotientMap(G, target, proj, N)


def is_normal(G: Group, H: SubgroupSet) -> bool:
    """Conjugation-invariance under G's generators."""
    el = H.elements
    mask = np.zeros(G.n, dtype=bool)
    mask[el] = True
    for g in G.gen_idx:
        if not mask[G.mul[G.mul[g, el], G.inv[g]]].all():
            return False
    return True


# -- isomorphism testing ----------------------------------------------------

def _iso_invariants(G: Group) -> tuple:
    if "iso_inv" not in G._cache:
        orders = element_orders(G)
        classes = conjugacy_classes(G)
        G._cache["iso_inv"] = (
            G.n,
            tuple(sorted(np.bincount(orders).tolist())),
            tuple(sorted((len(c), int(orders[c[0]])) for c in classes)),
        )
    return G._cache["iso_inv"]


def _extend_hom(A: Group, B: Group, gens: Sequence[int],
                images: Sequence[int]) -> np.ndarray | None:
    """Map on <gens> defined by gens -> images, or None on conflict."""
    phi = np.full(A.n, -1, dtype=np.intp)
    phi[0] = 0
    queue = [0]
    while queue:
        x = queue.pop(0)
        for g, ig in zip(gens, images):
            y = int(A.mul[x, g])
            im = int(B.mul[phi[x], ig])
            if phi[y] < 0:
                phi[y] = im
                queue.append(y)
            elif phi[y] != im:
                return None
    return phi


def are_isomorphic(A: Group, B: Group, cap: int = ISO_CAP) -> bool:
    """Generator-image backtracking with element-order pruning."""
    if A.n != B.n:
        return False
    if A.n > cap:
        raise IsoCapExceeded(f"order {A.n} exceeds isomorphism cap {cap}")
    if _iso_invariants(A) != _iso_invariants(B):
        return False
    gens = list(A.gen_idx)
    orders_a = element_orders(A)
    orders_b = element_orders(B)
    candidates = [np.nonzero(orders_b == orders_a[g])[0] for g in gens]

    def place(k: int, chosen: list[int]) -> bool:
        if k == len(gens):
            phi = _extend_hom(A, B, gens, chosen)
            if phi is None or (phi < 0).any():
                return False
            if np.unique(phi).size != A.n:
                return False
            return bool(np.array_equal(phi[A.mul], B.mul[np.ix_(phi, phi)]))
        for img in candidates[k]:
            # partial consistency: the map on <g_0..g_k> must be injective
            phi = _extend_hom(A, B, gens[:k + 1], chosen + [int(img)])
            if phi is None:
                continue
            assigned = phi[phi >= 0]
            if np.unique(assigned).size != assigned.size:
                continue
            if place(k + 1, chosen + [int(img)]):
                return True
        return False

    return place(0, [])

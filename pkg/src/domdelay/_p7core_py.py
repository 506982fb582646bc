"""Pure-Python twin of the compiled candidate-trial kernel.

Both kernels mutate the shared engine arrays in place and count state
touches into ``touch[0]`` at the same points, so their observable behavior
is identical entry for entry.

Array conventions (all ``array('q')``): vertices are 0-based; values
stored in ``dom_by``/``owner`` are vertex+1 with 0 meaning "none" and
``n+1`` the mid-trial steal sentinel.  ``comp`` holds 1-based component
indices (0 for redundant vertices), ``ca[v]`` the 1-based index of the
unique partially adjacent component of v (0 when there is none), and
``undom[i]`` the number of not-yet-dominated vertices of component i.
``priv_in[a]``/``priv_out[a]`` count the private neighbors of a inside and
outside its partial component, with priv_in = -1 when ca[a] = 0.
"""

COMPILED = False


class KernelState:
    """Candidate trials against the current set, on shared flat arrays."""

    __slots__ = (
        "rn",
        "n",
        "indptr",
        "nbrs",
        "undom",
        "comp",
        "ca",
        "priv_in",
        "priv_out",
        "owner",
        "in_ca",
        "dom_by",
        "jy",
        "ja",
        "jmeta",
        "touch",
    )

    def __init__(
        self,
        rn,
        n,
        indptr,
        nbrs,
        undom,
        comp,
        ca,
        priv_in,
        priv_out,
        owner,
        in_ca,
        dom_by,
        jy,
        ja,
        jmeta,
        touch,
    ):
        self.rn = rn
        self.n = n
        self.indptr = indptr
        self.nbrs = nbrs
        self.undom = undom
        self.comp = comp
        self.ca = ca
        self.priv_in = priv_in
        self.priv_out = priv_out
        self.owner = owner
        self.in_ca = in_ca
        self.dom_by = dom_by
        self.jy = jy
        self.ja = ja
        self.jmeta = jmeta
        self.touch = touch

    def scan_accept(self, start_pos, end_pos):
        """Try candidates rn[start:end] in order against the current set;
        commit the first acceptable one and return its position, with the
        steal journal in jy/ja (count in jmeta[0]).  Rejected trials are
        rolled back in place.  Returns -1 when the whole range rejects."""
        rn = self.rn
        indptr = self.indptr
        nbrs = self.nbrs
        undom = self.undom
        comp = self.comp
        ca = self.ca
        priv_in = self.priv_in
        priv_out = self.priv_out
        owner = self.owner
        in_ca = self.in_ca
        dom_by = self.dom_by
        jy = self.jy
        ja = self.ja
        sentinel = self.n + 1
        t = self.touch[0]
        for pos in range(start_pos, end_pos):
            c = rn[pos]
            cb = c + 1
            lo = indptr[c]
            hi = indptr[c + 1]
            jlen = 0
            newly = False
            t += 1
            for idx in range(lo, hi):
                y = nbrs[idx]
                t += 2
                if dom_by[y] == 0:
                    dom_by[y] = cb
                    owner[y] = cb
                    i = comp[y]
                    undom[i] -= 1
                    t += 4
                    if undom[i] == 0:
                        newly = True
                else:
                    oy = owner[y]
                    t += 1
                    if oy != 0 and oy != cb and oy != sentinel:
                        a = oy - 1
                        if in_ca[y] == 0:
                            priv_in[a] -= 1
                        else:
                            priv_out[a] -= 1
                        owner[y] = sentinel
                        jy[jlen] = y
                        ja[jlen] = oy
                        jlen += 1
                        t += 4
            ok = newly
            if ok:
                for j in range(jlen):
                    a = ja[j] - 1
                    t += 2
                    if priv_out[a] > 0:
                        continue
                    t += 2
                    if priv_in[a] > 0 and undom[ca[a]] == 0:
                        continue
                    ok = False
                    break
            if ok:
                # commit: clear the steal marks, register the new
                # member's private neighbors
                pin = 0
                pout = 0
                cca = ca[c]
                for idx in range(lo, hi):
                    y = nbrs[idx]
                    t += 1
                    if owner[y] == sentinel:
                        owner[y] = 0
                        t += 1
                    elif dom_by[y] == cb:
                        if cca != 0 and comp[y] == cca:
                            in_ca[y] = 0
                            pin += 1
                        else:
                            in_ca[y] = 1
                            pout += 1
                        t += 2
                priv_in[c] = pin if cca != 0 else -1
                priv_out[c] = pout
                t += 2
                self.jmeta[0] = jlen
                self.touch[0] = t
                return pos
            # reject: roll the trial back (dom_by still names the old
            # owner of every stolen private)
            for idx in range(lo, hi):
                y = nbrs[idx]
                t += 1
                if dom_by[y] == cb:
                    dom_by[y] = 0
                    owner[y] = 0
                    undom[comp[y]] += 1
                    t += 3
                elif owner[y] == sentinel:
                    oy = dom_by[y]
                    owner[y] = oy
                    if in_ca[y] == 0:
                        priv_in[oy - 1] += 1
                    else:
                        priv_out[oy - 1] += 1
                    t += 3
        self.jmeta[0] = 0
        self.touch[0] = t
        return -1

    def undo_commit(self, c, jy, ja, jlen):
        """Restore the state from before the commit of candidate c, using
        the steal journal the accepting scan produced."""
        nbrs = self.nbrs
        dom_by = self.dom_by
        owner = self.owner
        in_ca = self.in_ca
        priv_in = self.priv_in
        priv_out = self.priv_out
        cb = c + 1
        t = self.touch[0]
        for idx in range(self.indptr[c], self.indptr[c + 1]):
            y = nbrs[idx]
            t += 1
            if dom_by[y] == cb:
                dom_by[y] = 0
                owner[y] = 0
                in_ca[y] = 1
                self.undom[self.comp[y]] += 1
                t += 4
        for j in range(jlen):
            y = jy[j]
            oy = ja[j]
            owner[y] = oy
            if in_ca[y] == 0:
                priv_in[oy - 1] += 1
            else:
                priv_out[oy - 1] += 1
            t += 3
        priv_in[c] = 0 if self.ca[c] != 0 else -1
        priv_out[c] = 0
        self.touch[0] = t + 2

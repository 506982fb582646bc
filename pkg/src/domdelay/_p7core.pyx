# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate-trial kernel; see _p7core_py for the array contracts.

The two kernels must stay behaviorally identical, including the touch
counter, so every change here needs the same change in the fallback.
State buffers are acquired once at construction; scan/undo calls stay
cheap even when they examine a single candidate."""

COMPILED = True


cdef class KernelState:
    cdef long long[:] rn, indptr, nbrs, undom, comp, ca
    cdef long long[:] priv_in, priv_out, owner, in_ca, dom_by
    cdef long long[:] jy, ja, jmeta, touch
    cdef long long n

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

    def scan_accept(self, long long start_pos, long long end_pos):
        """Try candidates rn[start:end] in order against the current set;
        commit the first acceptable one and return its position, with the
        steal journal in jy/ja (count in jmeta[0]).  Rejected trials are
        rolled back in place.  Returns -1 when the whole range rejects."""
        cdef long long sentinel = self.n + 1
        cdef long long t = self.touch[0]
        cdef long long pos, c, cb, lo, hi, jlen, idx, y, i, oy, a, j
        cdef long long pin, pout, cca
        cdef bint newly, ok
        for pos in range(start_pos, end_pos):
            c = self.rn[pos]
            cb = c + 1
            lo = self.indptr[c]
            hi = self.indptr[c + 1]
            jlen = 0
            newly = False
            t += 1
            for idx in range(lo, hi):
                y = self.nbrs[idx]
                t += 2
                if self.dom_by[y] == 0:
                    self.dom_by[y] = cb
                    self.owner[y] = cb
                    i = self.comp[y]
                    self.undom[i] -= 1
                    t += 4
                    if self.undom[i] == 0:
                        newly = True
                else:
                    oy = self.owner[y]
                    t += 1
                    if oy != 0 and oy != cb and oy != sentinel:
                        a = oy - 1
                        if self.in_ca[y] == 0:
                            self.priv_in[a] -= 1
                        else:
                            self.priv_out[a] -= 1
                        self.owner[y] = sentinel
                        self.jy[jlen] = y
                        self.ja[jlen] = oy
                        jlen += 1
                        t += 4
            ok = newly
            if ok:
                for j in range(jlen):
                    a = self.ja[j] - 1
                    t += 2
                    if self.priv_out[a] > 0:
                        continue
                    t += 2
                    if self.priv_in[a] > 0 and self.undom[self.ca[a]] == 0:
                        continue
                    ok = False
                    break
            if ok:
                pin = 0
                pout = 0
                cca = self.ca[c]
                for idx in range(lo, hi):
                    y = self.nbrs[idx]
                    t += 1
                    if self.owner[y] == sentinel:
                        self.owner[y] = 0
                        t += 1
                    elif self.dom_by[y] == cb:
                        if cca != 0 and self.comp[y] == cca:
                            self.in_ca[y] = 0
                            pin += 1
                        else:
                            self.in_ca[y] = 1
                            pout += 1
                        t += 2
                if cca != 0:
                    self.priv_in[c] = pin
                else:
                    self.priv_in[c] = -1
                self.priv_out[c] = pout
                t += 2
                self.jmeta[0] = jlen
                self.touch[0] = t
                return pos
            for idx in range(lo, hi):
                y = self.nbrs[idx]
                t += 1
                if self.dom_by[y] == cb:
                    self.dom_by[y] = 0
                    self.owner[y] = 0
                    self.undom[self.comp[y]] += 1
                    t += 3
                elif self.owner[y] == sentinel:
                    oy = self.dom_by[y]
                    self.owner[y] = oy
                    if self.in_ca[y] == 0:
                        self.priv_in[oy - 1] += 1
                    else:
                        self.priv_out[oy - 1] += 1
                    t += 3
        self.jmeta[0] = 0
        self.touch[0] = t
        return -1

    def undo_commit(self, long long c, jy, ja, long long jlen):
        """Restore the state from before the commit of candidate c, using
        the steal journal the accepting scan produced."""
        cdef long long[:] jyv
        cdef long long[:] jav
        cdef long long cb = c + 1
        cdef long long t = self.touch[0]
        cdef long long idx, y, j, oy
        for idx in range(self.indptr[c], self.indptr[c + 1]):
            y = self.nbrs[idx]
            t += 1
            if self.dom_by[y] == cb:
                self.dom_by[y] = 0
                self.owner[y] = 0
                self.in_ca[y] = 1
                self.undom[self.comp[y]] += 1
                t += 4
        if jlen > 0:
            jyv = jy
            jav = ja
            for j in range(jlen):
                y = jyv[j]
                oy = jav[j]
                self.owner[y] = oy
                if self.in_ca[y] == 0:
                    self.priv_in[oy - 1] += 1
                else:
                    self.priv_out[oy - 1] += 1
                t += 3
        if self.ca[c] != 0:
            self.priv_in[c] = 0
        else:
            self.priv_in[c] = -1
        self.priv_out[c] = 0
        self.touch[0] = t + 2

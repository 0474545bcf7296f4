"""Pure-Python valuation sweep.  Mirrors ``_ckernels.pyx`` step for step."""

BACKEND_NAME = "python"


def _tables(p, limit):
    digits = []
    digit_sums = [0] * (limit + 1)
    floors = [0] * (limit + 1)
    for n in range(limit + 1):
        row = []
        x = n
        while x:
            x, r = divmod(x, p)
            row.append(r)
        digits.append(row)
        digit_sums[n] = sum(row)
        x, total = n, 0
        while x:
            x //= p
            total += x
        floors[n] = total
    return digits, digit_sums, floors


def _carries(da, db, p):
    carries = carry = 0
    for i in range(max(len(da), len(db))):
        t = (da[i] if i < len(da) else 0) + (db[i] if i < len(db) else 0) + carry
        carry = 1 if t >= p else 0
        carries += carry
    return carries


def valuation_sweep(p, limit):
    digits, s, floors = _tables(p, limit)
    mismatches = 0
    first = None
    for n in range(limit + 1):
        num = n - s[n]
        if num != (p - 1) * floors[n]:
            mismatches += 1
            if first is None:
                first = (n, -1, num // (p - 1), floors[n], 0)
    pairs = 0
    for n in range(limit + 1):
        sn, fn = s[n], floors[n]
        for k in range(n + 1):
            num = s[k] + s[n - k] - sn
            c = _carries(digits[k], digits[n - k], p)
            fdiff = fn - floors[k] - floors[n - k]
            if num != (p - 1) * c or c != fdiff:
                mismatches += 1
                if first is None:
                    first = (n, k, num // (p - 1), c, fdiff)
        pairs += n + 1
    return limit + 1, pairs, mismatches, first

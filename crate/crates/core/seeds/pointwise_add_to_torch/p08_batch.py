def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def add_rows(batch, offset):
    result = []
    for row in batch:
        r = []
        for i in range(len(row)):
            r.append(row[i] + offset[i])
        result.append(r)
    return result

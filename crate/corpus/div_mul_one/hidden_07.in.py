def pick_larger(a, b):
    if a >= b:
        return a
    return b

def ratios(values):
    total = sum(values)
    if total == 0:
        return []
    return [v * 1 / total for v in values]
# probe: ratios([1, 3])
# probe: ratios([0])

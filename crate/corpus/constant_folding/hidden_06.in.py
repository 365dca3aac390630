def pick_larger(a, b):
    if a >= b:
        return a
    return b

def thresholds():
    return [10 * 1, 10 * 2, 10 * 3, 10 * 4]

def count_over(values):
    return sum([1 for v in values if v > thresholds()[1 + 1]])
# probe: thresholds()
# probe: count_over([5, 25, 31, 40])

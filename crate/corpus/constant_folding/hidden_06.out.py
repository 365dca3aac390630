def pick_larger(a, b):
    if a >= b:
        return a
    return b
def thresholds():
    return [10, 20, 30, 40]
def count_over(values):
    return sum([1 for v in values if v > thresholds()[2]])

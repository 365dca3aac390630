def pick_larger(a, b):
    if a >= b:
        return a
    return b
def weighted_score(scores, weights):
    total = 0
    for s, w in zip(scores, weights):
        total += s * w
    return total

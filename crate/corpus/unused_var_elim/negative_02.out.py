def pick_larger(a, b):
    if a >= b:
        return a
    return b
def split_pair(pair):
    left, right = pair
    return left

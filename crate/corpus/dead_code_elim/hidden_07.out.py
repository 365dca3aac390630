def pick_larger(a, b):
    if a >= b:
        return a
    return b
def parse_pair(text):
    left, right = text.split(',')
    return int(left) + int(right)

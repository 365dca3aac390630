def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def rejects(pairs):
    return [p for p in pairs if not (p[0] > 0 and p[1] > 0)]
# probe: rejects([(1, 2), (-1, 2), (3, -4), (0, 0)])

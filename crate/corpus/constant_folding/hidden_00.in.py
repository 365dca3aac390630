def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def chunk(items, size=2 * 2):
    out = []
    for i in range(0, len(items), size):
        out.append(items[i:i + size])
    return out
# probe: chunk(list(range(10)))
# probe: chunk([1, 2, 3], 1)

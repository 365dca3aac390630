def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def firsts(rows):
    heads = []
    for row in rows:
        heads.append(row[0])
    return heads
# probe: firsts([[1, 2], [3, 4], [5]])

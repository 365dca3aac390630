def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def rotate(items, k):
    if not items:
        return items
    k = (k + 0) % len(items)
    return items[k:] + items[:k]

def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def score(word):
    total = 0
    for ch in word:
        total += len(ch * 3)
    return total

def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
scores = [55, 91, 78, 99, 40]
honors = [s for s in scores if s >= 90]
print(honors)

def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def triangle_numbers(n):
    out = []
    for k in range(1, n + 1):
        out.append(k * (k + 1) // 2 * 1)
    return out
# probe: triangle_numbers(5)

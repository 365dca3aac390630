def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def multiples(n, k):
    out = []
    for m in range(n):
        if m % k == 0 and m > 0:
            out.append(m)
    return out
# probe: multiples(20, 6)

def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def fizz_only(n):
    out = []
    for i in range(1, n + 1):
        if i % 3 == 0:
            if i % 5 != 0:
                out.append(i)
    return out
# probe: fizz_only(20)

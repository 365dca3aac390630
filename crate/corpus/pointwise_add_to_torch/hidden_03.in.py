def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def merge(a, b, inplace):
    if inplace:
        return None
    else:
        m = []
        for i in range(len(a)):
            m.append(a[i] + b[i])
        return m

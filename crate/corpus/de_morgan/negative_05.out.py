def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def label(n):
    if n > 0:
        if n > 10:
            return 'big'
    else:
        return 'nonpositive'
    return 'small'

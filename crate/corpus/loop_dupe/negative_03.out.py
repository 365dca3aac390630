def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def total(values):
    if not values:
        return 0
    return values[0] + total(values[1:])

def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def access(admin, owner):
    if admin or owner:
        return 'full'
    else:
        return 'read only'

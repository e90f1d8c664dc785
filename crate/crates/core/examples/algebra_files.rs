//! Writing and reading algebra files.

use nilsum::driver::{load_algebra, save_algebra, AlgebraFile, AlgebraSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("zassenhaus.json");

    let built = AlgebraSpec::parse("zassenhaus:p=5,n=1")?.build()?;
    save_algebra(&path, &built.algebra, built.grading.as_deref())?;
    let (back, graded) = load_algebra(&path)?;
    println!(
        "round trip keeps the table: {}",
        back.structure_constants() == built.algebra.structure_constants()
    );
    println!("grading: {:?}", graded.map(|g| g.degrees().to_vec()));

    // a file whose table violates Jacobi is refused on load
    let mut file = AlgebraFile::from_algebra(&built.algebra, None);
    file.sc[0][3] = (file.sc[0][3] + 1) % 5;
    match file.to_algebra() {
        Ok(_) => println!("corruption went unnoticed"),
        Err(e) => println!("corrupted file rejected: {e}"),
    }
    Ok(())
}
